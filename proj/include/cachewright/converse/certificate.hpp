#pragma once

#include "cachewright/converse/entropy.hpp"
#include "cachewright/model.hpp"
#include "cachewright/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cachewright::converse {

// Axiom instances. Each renders to an expression that is >= 0 (inequalities)
// or == 0 (equalities) for every symmetric caching scheme.

struct Submodularity {  // H(A)+H(B)-H(A|B)-H(A&B) >= 0
  VarSet A, B;
};
struct Monotonicity {  // H(sup)-H(sub) >= 0
  VarSet sub, sup;
};
struct Decodability {  // H(S + W_{d_user}) - H(S) = 0, needs Z_user and X_demand in S
  int user;
  int demand;
  VarSet S;
};
struct Totality {  // H(S) - N = 0 once S holds every file
  VarSet S;
};
struct CacheBound {  // M - H(Z_user) >= 0
  int user;
};
struct RateBound {  // R - H(X_demand) >= 0
  int demand;
};
struct FileIndependence {  // H(W_S) - |S| = 0
  VarSet S;
};
struct PermSymmetry {  // H(S) - H(pi S) = 0; perm[u-1] = pi(u)
  std::vector<int> perm;
  VarSet S;
};
struct FileSymmetry {  // H(W_n, Z_user) - H(W_p, Z_user) = 0
  int n, p, user;
};

using Axiom = std::variant<Submodularity, Monotonicity, Decodability, Totality, CacheBound, RateBound,
                           FileIndependence, PermSymmetry, FileSymmetry>;

struct WeightedAxiom {
  Axiom axiom;
  Rational mul;
};

// cM*M + cR*R >= c
struct Target {
  Rational cM, cR, c;
  friend bool operator==(const Target&, const Target&) = default;
};

struct Certificate {
  int N = 0;
  int K = 0;
  int case_id = 0;
  std::vector<Demand> table;  // demand id t is table[t-1]
  std::vector<WeightedAxiom> axioms;
  Target target;
};

std::string kind_name(const Axiom& ax);
bool is_equality(const Axiom& ax);

/// Image of a demand under a user permutation: (pi d)_u = d_{pi^{-1}(u)}.
Demand permute_demand(const Demand& d, const std::vector<int>& perm);

enum class FailureKind {
  None,
  MalformedAxiom,
  SymmetryOutsideTable,
  NegativeMultiplierOnInequality,
  NonCancelling,
  TargetNotImplied,
};

std::string to_string(FailureKind kind);

struct Violation {
  FailureKind kind;
  std::string detail;
};

/// Structural side conditions. Returns nothing when the instance is well formed.
std::optional<Violation> validate(const Axiom& ax, const Certificate& cert);

/// The linear expression the axiom asserts. Assumes validate() passed.
LinComb render(const Axiom& ax, const Certificate& cert);

struct CheckReport {
  bool pass = false;
  FailureKind kind = FailureKind::None;
  std::optional<std::size_t> axiom_index;
  std::string detail;
  LinComb residual;  // sum of multiplier * rendered axiom
};

CheckReport check_certificate(const Certificate& cert);

std::string target_string(const Target& t);

}  // namespace cachewright::converse

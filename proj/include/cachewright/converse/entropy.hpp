#pragma once

#include "cachewright/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cachewright::converse {

struct RandomVar {
  enum class Kind { File, Cache, Bcast };
  Kind kind;
  int index;  // 1-based; Bcast indexes the certificate's demand table
};

// Set of random variables, one bitmask per kind. Supports up to 64 of each.
struct VarSet {
  std::uint64_t files = 0;
  std::uint64_t caches = 0;
  std::uint64_t bcasts = 0;

  static VarSet of(std::initializer_list<RandomVar> vars);
  static VarSet file_range(int lo, int hi);
  static VarSet bcast_ids(const std::vector<int>& ids);

  VarSet& add(RandomVar v);
  VarSet with_file(int n) const;
  VarSet with_cache(int l) const;
  VarSet with_bcast(int d) const;

  bool has_file(int n) const { return (files >> (n - 1)) & 1U; }
  bool has_cache(int l) const { return (caches >> (l - 1)) & 1U; }
  bool has_bcast(int d) const { return (bcasts >> (d - 1)) & 1U; }
  bool empty() const { return files == 0 && caches == 0 && bcasts == 0; }
  bool subset_of(const VarSet& o) const {
    return (files & ~o.files) == 0 && (caches & ~o.caches) == 0 && (bcasts & ~o.bcasts) == 0;
  }
  std::vector<RandomVar> members() const;

  VarSet operator|(const VarSet& o) const { return {files | o.files, caches | o.caches, bcasts | o.bcasts}; }
  VarSet operator&(const VarSet& o) const { return {files & o.files, caches & o.caches, bcasts & o.bcasts}; }
  friend auto operator<=>(const VarSet&, const VarSet&) = default;
};

/// "{W1,Z2,X3}"; the empty set prints as "{}".
std::string to_string(const VarSet& s);
/// Inverse of to_string. Throws Error(ParseError).
VarSet parse_varset(const std::string& text);

// sum_S c_S H(S) + cM*M + cR*R + c0. H of the empty set is zero and is dropped.
struct LinComb {
  std::map<VarSet, Rational> terms;
  Rational cM{0}, cR{0}, c0{0};

  LinComb& add_entropy(const VarSet& s, const Rational& c);
  LinComb& add_scaled(const LinComb& other, const Rational& c);
  bool entropy_free() const { return terms.empty(); }
  bool is_zero() const { return terms.empty() && cM == Rational(0) && cR == Rational(0) && c0 == Rational(0); }
};

std::string to_string(const LinComb& e);

}  // namespace cachewright::converse

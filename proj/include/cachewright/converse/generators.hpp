#pragma once

#include "cachewright/converse/certificate.hpp"
#include "cachewright/converse/demand_tables.hpp"
#include "cachewright/rational.hpp"

#include <string>

namespace cachewright::converse {

/// K M + K(N-1) R >= KN - 1. Requires N >= 2 and 2N >= K+1.
Certificate gen_certificate_theorem2(int N, int K);
/// K(K+1)/(2N) M + K(K-1)/2 R >= (K^2+K-2)/2. Requires N >= 2 and 2N-1 <= K.
Certificate gen_certificate_theorem4(int N, int K);

Target theorem2_target(int N, int K);
Target theorem4_target(int N, int K);

/// Rate the target forces at memory M.
Rational bound_rate(const Target& t, const Rational& M);

struct TightnessReport {
  int N = 0, K = 0, theorem = 0;
  Rational M;             // corner where the bound is evaluated
  Rational bound_R;       // smallest R the bound allows there
  Rational achievable_R;  // rate of the matching achievable scheme
  std::string achiever;
  bool tight = false;
};

/// Theorem 2 at (M_A, new scheme) or theorem 4 at (N(K-2)/K, Yu r=K-2).
/// Evaluation only; the range is the one stated for each theorem.
TightnessReport tightness_check(int N, int K, int theorem);

}  // namespace cachewright::converse

#pragma once

#include "cachewright/rational.hpp"

#include <string>
#include <vector>

namespace cachewright {

struct CurvePoint {
  Rational M;
  Rational R;
  std::string tag;
};

struct Segment {
  Rational M_lo, M_hi;
  Rational intercept, slope;
  std::string provenance;
  std::string lo_tag, hi_tag;

  Rational at(const Rational& M) const { return intercept + slope * M; }
};

struct TradeoffCurve {
  std::vector<Segment> segments;

  bool empty() const { return segments.empty(); }
  /// Throws OutOfRange outside [first M_lo, last M_hi].
  Rational eval(const Rational& M) const;
};

// Parameter ranges in which the two matching lower bounds are proved valid.
// The first also requires N <= K.
bool case1_valid(int N, int K);
bool case2_valid(int N, int K);

struct Line {
  Rational intercept, slope;
  Rational at(const Rational& M) const { return intercept + slope * M; }
};

/// (KN-1)/(K(N-1)) - M/(N-1). Needs N >= 2.
Line theorem_line_case1(int N, int K);
/// (K^2+K-2)/(K(K-1)) - (K+1)/(N(K-1)) M. Needs K >= 2.
Line theorem_line_case2(int N, int K);

struct ExactValue {
  Rational R;
  std::vector<std::string> tags;
};

/// R*(M) where it is characterized. Throws OutsideCharacterizedRegion below it.
ExactValue exact_tradeoff_tagged(int N, int K, const Rational& M);
Rational exact_tradeoff(int N, int K, const Rational& M);
/// Smallest M at which exact_tradeoff is defined.
Rational characterized_from(int N, int K);

/// Lower convex hull. Collinear interior points are dropped. Every segment is
/// tagged "memory-sharing"; endpoint tags carry the point tags.
TradeoffCurve lower_envelope(std::vector<CurvePoint> points);

/// Best known achievable curve built from every closed-form corner point.
TradeoffCurve assemble_known_curve(int N, int K);

/// CSV text. samples == 0 emits segment endpoints only; otherwise samples >= 2
/// uniform points on [0, M_max] are added.
std::string emit_csv(const TradeoffCurve& curve, int samples);

}  // namespace cachewright

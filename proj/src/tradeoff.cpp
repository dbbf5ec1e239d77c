#include "cachewright/tradeoff.hpp"

#include "cachewright/error.hpp"
#include "cachewright/scheme_baselines.hpp"
#include "cachewright/scheme_new.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cachewright {

Rational TradeoffCurve::eval(const Rational& M) const {
  for (const auto& s : segments) {
    if (M >= s.M_lo && M <= s.M_hi) return s.at(M);
  }
  throw Error(ErrorCode::OutOfRange, "M=" + to_short_string(M) + " outside the curve domain");
}

bool case1_valid(int N, int K) { return N >= 2 && N <= K && 2 * N >= K + 1; }
bool case2_valid(int N, int K) { return N >= 2 && 2 * N - 1 <= K; }

Line theorem_line_case1(int N, int K) {
  if (N < 2) throw Error(ErrorCode::OutsideCharacterizedRegion, "case-I line needs N >= 2");
  return {Rational(K * N - 1, K * (N - 1)), Rational(-1, N - 1)};
}

Line theorem_line_case2(int N, int K) {
  if (K < 2) throw Error(ErrorCode::OutsideCharacterizedRegion, "case-II line needs K >= 2");
  return {Rational(K * K + K - 2, K * (K - 1)), Rational(-(K + 1), N * (K - 1))};
}

Rational characterized_from(int N, int K) {
  if (case2_valid(N, K)) return Rational(N * (K - 2), K);
  if (case1_valid(N, K)) return scheme_point(N, K).first;
  return Rational(N * (K - 1), K);
}

ExactValue exact_tradeoff_tagged(int N, int K, const Rational& M) {
  if (N < 1 || K < 1 || N > K) throw Error(ErrorCode::ConfigMismatch, "need 1 <= N <= K");
  if (M >= N) return {Rational(0), {"man"}};
  const Rational corner(N * (K - 1), K);
  if (M >= corner) return {Rational(1) - M / N, {"man"}};
  if (M < characterized_from(N, K)) {
    throw Error(ErrorCode::OutsideCharacterizedRegion,
                "M=" + to_short_string(M) + " is below " + to_short_string(characterized_from(N, K)));
  }
  const bool c1 = case1_valid(N, K) && M >= scheme_point(N, K).first;
  const bool c2 = case2_valid(N, K);
  if (c1 && c2) {
    const Rational r1 = theorem_line_case1(N, K).at(M);
    const Rational r2 = theorem_line_case2(N, K).at(M);
    return {std::min(r1, r2), {"theorem-case1", "theorem-case2"}};
  }
  if (c2) return {theorem_line_case2(N, K).at(M), {"theorem-case2"}};
  return {theorem_line_case1(N, K).at(M), {"theorem-case1"}};
}

Rational exact_tradeoff(int N, int K, const Rational& M) { return exact_tradeoff_tagged(N, K, M).R; }

namespace {

Rational cross(const CurvePoint& o, const CurvePoint& a, const CurvePoint& b) {
  return (a.M - o.M) * (b.R - o.R) - (a.R - o.R) * (b.M - o.M);
}

// Does the segment lie on `line` and overlap [lo, hi] in a nondegenerate interval?
bool follows(const Segment& s, const Line& line, const Rational& lo, const Rational& hi) {
  if (s.slope != line.slope || s.intercept != line.intercept) return false;
  return std::min(s.M_hi, hi) > std::max(s.M_lo, lo);
}

bool has_tag(const std::string& tags, const std::string& prefix) {
  std::stringstream ss(tags);
  std::string t;
  while (std::getline(ss, t, '+')) {
    if (t.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

std::string provenance_for(const Segment& s, int N, int K) {
  std::vector<std::string> tags;
  const Line chen{Rational(N), Rational(-N)};
  if (follows(s, chen, Rational(0), Rational(1, K))) tags.push_back("chen");
  if (K == N && N >= 2) {
    const Line gomez{Rational(N * N - 1, N), Rational(-(N - 1))};
    if (follows(s, gomez, Rational(1, N), Rational(1, N - 1))) tags.push_back("gomez");
  }
  const Rational corner(N * (K - 1), K);
  if (case1_valid(N, K) && follows(s, theorem_line_case1(N, K), scheme_point(N, K).first, corner)) {
    tags.push_back("theorem-case1");
  }
  if (case2_valid(N, K) && follows(s, theorem_line_case2(N, K), Rational(N * (K - 2), K), corner)) {
    tags.push_back("theorem-case2");
  }
  const Line man{Rational(1), Rational(-1, N)};
  if (follows(s, man, corner, Rational(N))) tags.push_back("man");
  if (tags.empty()) {
    tags.push_back(has_tag(s.lo_tag, "yu") && has_tag(s.hi_tag, "yu") ? "yu" : "memory-sharing");
  }
  std::string out;
  for (const auto& t : tags) out += (out.empty() ? "" : "+") + t;
  return out;
}

}  // namespace

TradeoffCurve lower_envelope(std::vector<CurvePoint> points) {
  if (points.size() < 2) throw Error(ErrorCode::DegenerateInput, "need at least two points");
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.M < b.M; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].M == points[i - 1].M) {
      throw Error(ErrorCode::DegenerateInput, "duplicate M=" + to_short_string(points[i].M));
    }
  }
  std::vector<CurvePoint> hull;
  for (const auto& p : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  TradeoffCurve curve;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const auto& a = hull[i - 1];
    const auto& b = hull[i];
    const Rational slope = (b.R - a.R) / (b.M - a.M);
    curve.segments.push_back({a.M, b.M, a.R - slope * a.M, slope, "memory-sharing", a.tag, b.tag});
  }
  return curve;
}

TradeoffCurve assemble_known_curve(int N, int K) {
  if (N < 1 || K < 2 || N > K) throw Error(ErrorCode::ConfigMismatch, "need 1 <= N <= K, K >= 2");
  std::vector<CurvePoint> raw;
  raw.push_back({Rational(0), Rational(N), "chen"});
  raw.push_back({Rational(1, K), rate_chen(N, K, Rational(1, K)), "chen-point"});
  if (K == N && N >= 2) {
    raw.push_back({Rational(1, N), rate_gomez(N, Rational(1, N)), "gomez-point"});
    raw.push_back({Rational(1, N - 1), rate_gomez(N, Rational(1, N - 1)), "gomez-point"});
  }
  for (int r = 1; r <= K; ++r) raw.push_back({yu_memory(N, K, r), rate_yu(N, K, r), "yu-r" + std::to_string(r)});
  const auto [ma, ra] = scheme_point(N, K);
  raw.push_back({ma, ra, "theorem-1-point"});
  raw.push_back({Rational(N * (K - 1), K), Rational(1, K), "man-point"});
  raw.push_back({Rational(N), Rational(0), "full-cache"});

  // Collapse equal M: keep the lowest R, join tags of exact ties.
  std::map<Rational, CurvePoint> best;
  for (const auto& p : raw) {
    auto it = best.find(p.M);
    if (it == best.end()) {
      best.emplace(p.M, p);
    } else if (p.R < it->second.R) {
      it->second = p;
    } else if (p.R == it->second.R && !has_tag(it->second.tag, p.tag)) {
      it->second.tag += "+" + p.tag;
    }
  }
  std::vector<CurvePoint> pts;
  for (auto& [m, p] : best) pts.push_back(p);

  TradeoffCurve curve = lower_envelope(std::move(pts));
  for (auto& s : curve.segments) s.provenance = provenance_for(s, N, K);
  return curve;
}

std::string emit_csv(const TradeoffCurve& curve, int samples) {
  if (samples == 1 || samples < 0) throw Error(ErrorCode::DegenerateInput, "samples must be 0 or >= 2");
  std::ostringstream out;
  out << "M_exact,M_decimal,R_exact,R_decimal,provenance\n";
  if (curve.empty()) return out.str();

  std::map<Rational, std::pair<Rational, std::string>> rows;
  for (const auto& s : curve.segments) {
    rows.emplace(s.M_lo, std::make_pair(s.at(s.M_lo), s.lo_tag));
    rows.emplace(s.M_hi, std::make_pair(s.at(s.M_hi), s.hi_tag));
  }
  const Rational lo = curve.segments.front().M_lo;
  const Rational hi = curve.segments.back().M_hi;
  for (int i = 0; i < samples; ++i) {
    const Rational M = lo + (hi - lo) * Rational(i, samples - 1);
    if (rows.count(M)) continue;
    for (const auto& s : curve.segments) {
      if (M >= s.M_lo && M <= s.M_hi) {
        rows.emplace(M, std::make_pair(s.at(M), s.provenance));
        break;
      }
    }
  }
  for (const auto& [M, v] : rows) {
    out << to_fraction_string(M) << ',' << to_decimal_string(M) << ',' << to_fraction_string(v.first) << ','
        << to_decimal_string(v.first) << ',' << v.second << '\n';
  }
  return out.str();
}

}  // namespace cachewright

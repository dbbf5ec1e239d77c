// Acceptance suite: one PASS/FAIL line per criterion. All value comparisons are
// exact rationals; the only tolerances are the wall-clock limits below.

#include "cachewright/cli.hpp"
#include "cachewright/converse/certificate.hpp"
#include "cachewright/converse/generators.hpp"
#include "cachewright/error.hpp"
#include "cachewright/model.hpp"
#include "cachewright/scheme_baselines.hpp"
#include "cachewright/scheme_new.hpp"
#include "cachewright/tradeoff.hpp"
#include "set_identities.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cachewright;
using namespace cachewright::converse;

namespace {

constexpr double kC1TimeLimitMs = 1000.0;
constexpr double kC2TimeLimitMs = 120000.0;
constexpr int kGridMaxK = 7;
constexpr int kCertMaxK = 8;
constexpr int kIdentityMaxK = 10;
constexpr std::size_t kRoundtripBytes = 10 * 1024;

struct Verdict {
  bool pass;
  std::string detail;
};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string nk(int N, int K) { return "(" + std::to_string(N) + "," + std::to_string(K) + ")"; }
std::string q(const Rational& r) { return to_short_string(r); }

Rational choose(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 1; i <= k; ++i) r *= Rational(n - k + i, i);
  return r;
}

// Oracle for the new scheme's corner, written in the unsimplified form
// (N/K)(K-2 + (K-2+1/N)/(K-1)).
Rational oracle_new_M(int N, int K) {
  const Rational inner = Rational(K - 2) + (Rational(K - 2) + Rational(1, N)) / Rational(K - 1);
  return Rational(N, K) * inner;
}

// Oracle for the rate forced by a*M + b*R >= c.
Rational oracle_bound(const Rational& a, const Rational& b, const Rational& c, const Rational& M) {
  return (c - a * M) / b;
}

Verdict criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = cli::run_verify(make_config(3, 4), cli::Scheme::New, cli::default_jobs());
  const double ms = elapsed_ms(t0);
  const bool ok = rep.demands_checked == 36 && rep.decodes_checked == 144 && rep.failures.empty() &&
                  rep.M == Rational(25, 12) && rep.R == Rational(1, 3) && ms < kC1TimeLimitMs;
  std::ostringstream os;
  os << "demands=" << rep.demands_checked << " decodes=" << rep.decodes_checked
     << " failures=" << rep.failures.size() << " M=" << q(rep.M) << " R=" << q(rep.R) << " time_ms=" << ms;
  return {ok, os.str()};
}

Verdict criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  int configs = 0, bad = 0;
  std::size_t decodes = 0;
  std::string first_bad;
  for (int K = 2; K <= kGridMaxK; ++K) {
    for (int N = 2; N <= K; ++N) {
      const auto rep = cli::run_verify(make_config(N, K), cli::Scheme::New, cli::default_jobs());
      ++configs;
      decodes += rep.decodes_checked;
      const bool ok = rep.pass() && rep.M == oracle_new_M(N, K) && rep.R == Rational(1, K - 1);
      if (!ok) {
        ++bad;
        if (first_bad.empty()) first_bad = nk(N, K) + " M=" + q(rep.M) + " R=" + q(rep.R);
      }
    }
  }
  const double ms = elapsed_ms(t0);
  std::ostringstream os;
  os << "configs=" << configs << " decodes=" << decodes << " bad=" << bad << " time_ms=" << ms;
  if (!first_bad.empty()) os << " first_bad=" << first_bad;
  return {bad == 0 && ms < kC2TimeLimitMs, os.str()};
}

Verdict criterion3() {
  int configs = 0, bad = 0;
  std::size_t decodes = 0;
  for (int K = 2; K <= kGridMaxK; ++K) {
    for (int N = 1; N <= K; ++N) {
      const auto rep = cli::run_verify(make_config(N, K), cli::Scheme::Man, cli::default_jobs());
      ++configs;
      decodes += rep.decodes_checked;
      if (!rep.pass() || rep.R != Rational(1, K) || rep.M != Rational(N * (K - 1), K)) ++bad;
    }
  }
  std::ostringstream os;
  os << "configs=" << configs << " (K from 2; MAN needs K >= 2) decodes=" << decodes << " bad=" << bad;
  return {bad == 0, os.str()};
}

Verdict criterion4() {
  int certs = 0, failed = 0, mutations = 0, survived = 0;
  for (int K = 2; K <= kCertMaxK; ++K) {
    for (int N = 2; N <= K; ++N) {
      if (!case1_valid(N, K)) continue;
      const auto c = gen_certificate_theorem2(N, K);
      ++certs;
      if (!check_certificate(c).pass) ++failed;
      for (std::size_t i = 0; i < c.axioms.size(); ++i) {
        auto m = c;
        m.axioms[i].mul += 1;
        ++mutations;
        if (check_certificate(m).pass) ++survived;
      }
    }
  }
  const auto c34 = gen_certificate_theorem2(3, 4);
  const std::string t34 = target_string(c34.target);
  std::ostringstream os;
  os << "certificates=" << certs << " failed=" << failed << " (3,4) target \"" << t34 << "\" mutations=" << mutations
     << " surviving_mutations=" << survived;
  return {failed == 0 && survived == 0 && t34 == "4M+8R >= 11", os.str()};
}

// Stated range for the second bound: 1 <= N <= ceil((K+1)/2).
bool stated_case2_range(int N, int K) { return N >= 1 && N <= (K + 2) / 2; }

Verdict criterion5() {
  int in_range = 0, passed = 0;
  std::vector<std::string> refuted;
  for (int K = 2; K <= kCertMaxK; ++K) {
    for (int N = 1; N <= K; ++N) {
      if (!stated_case2_range(N, K)) continue;
      ++in_range;
      bool ok = false;
      try {
        ok = check_certificate(gen_certificate_theorem4(N, K)).pass;
      } catch (const Error&) {
        ok = false;
      }
      if (ok) {
        ++passed;
        continue;
      }
      // Evidence: an achievable point that violates the stated inequality.
      const Target t = theorem4_target(N, K);
      Rational M, R;
      std::string who;
      if (N == 1) {
        M = Rational(0), R = Rational(1), who = "broadcast";
      } else {
        const auto p = scheme_point(N, K);
        M = p.first, R = p.second, who = "new-scheme";
      }
      const Rational lhs = t.cM * M + t.cR * R;
      std::ostringstream e;
      e << nk(N, K) << " " << who << " (" << q(M) << "," << q(R) << ") gives " << q(lhs)
        << (lhs < t.c ? " < " : " >= ") << q(t.c);
      refuted.push_back(e.str());
    }
  }
  const auto c24 = gen_certificate_theorem4(2, 4);
  const std::string t24 = target_string(c24.target);
  std::ostringstream os;
  os << "in_range=" << in_range << " passed=" << passed << " (2,4) target \"" << t24 << "\"";
  if (!refuted.empty()) {
    os << " not certifiable=" << refuted.size() << ":";
    for (const auto& r : refuted) os << " [" << r << "]";
  }
  return {passed == in_range && t24 == "5M+6R >= 9", os.str()};
}

Verdict criterion6() {
  int c1 = 0, c1_ok = 0, c2 = 0, c2_match_yu = 0, c2_match_2overK = 0;
  std::vector<std::string> notes;
  for (int K = 2; K <= kCertMaxK; ++K) {
    for (int N = 1; N <= K; ++N) {
      if (case1_valid(N, K)) {
        ++c1;
        const Rational M = oracle_new_M(N, K);
        const Rational B = oracle_bound(Rational(K), Rational(K * (N - 1)), Rational(K * N - 1), M);
        const auto rep = tightness_check(N, K, 2);
        if (B == Rational(1, K - 1) && rep.bound_R == B && rep.tight) ++c1_ok;
      }
      if (stated_case2_range(N, K) && K >= 3) {
        ++c2;
        const Rational M(N * (K - 2), K);
        const Rational B = oracle_bound(Rational(K * (K + 1), 2 * N), Rational(K * (K - 1), 2),
                                        Rational(K * K + K - 2, 2), M);
        const Rational yu = (choose(K, K - 1) - choose(K - N, K - 1)) / choose(K, K - 2);
        if (B == yu) {
          ++c2_match_yu;
        } else {
          notes.push_back(nk(N, K) + " bound=" + q(B) + " yu=" + q(yu));
        }
        if (B == Rational(2, K) && yu == Rational(2, K)) ++c2_match_2overK;
      }
    }
  }
  std::ostringstream os;
  os << "first bound at M_A equals 1/(K-1): " << c1_ok << "/" << c1 << "; second bound at N(K-2)/K equals rate_yu: "
     << c2_match_yu << "/" << c2 << "; equals 2/K: " << c2_match_2overK << "/" << c2;
  if (!notes.empty()) {
    os << "; mismatches:";
    for (const auto& n : notes) os << " [" << n << "]";
  }
  os << "; rate_yu(N,K,K-2) is 2/(K-1) for N >= 2, e.g. rate_yu(2,4,2)=" << q(rate_yu(2, 4, 2));
  return {c1_ok == c1 && c2_match_yu == c2 && c2_match_2overK == c2, os.str()};
}

bool has_vertex(const TradeoffCurve& c, const Rational& M, const Rational& R) {
  for (const auto& s : c.segments) {
    if ((s.M_lo == M || s.M_hi == M) && s.at(M) == R) return true;
  }
  return false;
}

bool has_segment(const TradeoffCurve& c, Rational lo, Rational hi, Rational b, Rational m) {
  for (const auto& s : c.segments) {
    if (s.M_lo == lo && s.M_hi == hi && s.intercept == b && s.slope == m) return true;
  }
  return false;
}

Verdict criterion7() {
  const auto c34 = assemble_known_curve(3, 4);
  const auto c24 = assemble_known_curve(2, 4);
  struct Item {
    std::string name;
    bool ok;
  };
  const std::vector<Item> items = {
      {"(3,4) R=11/8-M/2 on [25/12,9/4]",
       has_segment(c34, Rational(25, 12), Rational(9, 4), Rational(11, 8), Rational(-1, 2))},
      {"(2,4) R=3/2-5M/6 on [1,3/2]", has_segment(c24, Rational(1), Rational(3, 2), Rational(3, 2), Rational(-5, 6))},
      {"(1/4,9/4)", has_vertex(c34, Rational(1, 4), Rational(9, 4))},
      {"(9/4,1/4)", has_vertex(c34, Rational(9, 4), Rational(1, 4))},
      {"(1/4,3/2)", has_vertex(c24, Rational(1, 4), Rational(3, 2))},
      {"(3/2,1/4)", has_vertex(c24, Rational(3, 2), Rational(1, 4))},
      {"(1,2/3)", has_vertex(c24, Rational(1), Rational(2, 3))},
  };
  bool all = true;
  std::string detail;
  for (const auto& it : items) {
    all = all && it.ok;
    detail += it.name + (it.ok ? " ok; " : " MISSING; ");
  }
  return {all, detail};
}

Verdict criterion8() {
  const auto t = idcheck::check_all(kIdentityMaxK);
  std::ostringstream os;
  os << "identities_checked=" << t.checked << " failed=" << t.errors.size() << " skipped=" << t.skipped
     << " (skips: no table at the even-K boundary 2N=K+2, B_{N-1} undefined at N=1, no j when 2N>K)";
  for (std::size_t i = 0; i < t.errors.size() && i < 5; ++i) os << " [" << t.errors[i] << "]";
  return {t.errors.empty() && t.checked > 0, os.str()};
}

Verdict criterion9() {
  std::mt19937_64 rng(20261016);
  Bytes payload(kRoundtripBytes);
  for (auto& b : payload) b = static_cast<std::uint8_t>(rng());
  int runs = 0, bad = 0;
  const std::vector<std::pair<NetworkConfig, Demand>> cases = {
      {make_config(3, 4), Demand{{1, 1, 2, 3}}},
      {make_config(2, 4), Demand{{1, 2, 1, 1}}},
      {make_config(4, 4), Demand{{4, 3, 2, 1}}},
  };
  for (const auto scheme : {cli::Scheme::New, cli::Scheme::Man}) {
    for (const auto& [cfg, demand] : cases) {
      for (int user = 1; user <= cfg.K; ++user) {
        const auto r = cli::roundtrip(cfg, scheme, demand, user, payload);
        ++runs;
        if (!r.all_users_ok || r.decoded != payload) ++bad;
      }
    }
  }
  std::ostringstream os;
  os << "bytes=" << kRoundtripBytes << " runs=" << runs << " (configs (3,4),(2,4),(4,4), every user, both schemes) bad="
     << bad;
  return {bad == 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria = {criterion1, criterion2, criterion3,
                                                          criterion4, criterion5, criterion6,
                                                          criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("criterion %zu: %s %s\n", i + 1, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "cachewright/converse/generators.hpp"

#include "cachewright/error.hpp"
#include "cachewright/scheme_baselines.hpp"
#include "cachewright/scheme_new.hpp"
#include "cachewright/tradeoff.hpp"

#include <algorithm>
#include <stdexcept>

namespace cachewright::converse {

namespace {

VarSet X(const IdSet& ids) { return VarSet::bcast_ids(ids); }
VarSet Z(int l) { return VarSet{}.with_cache(l); }

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("certificate generator invariant: ") + what);
}

// Appends axiom instances. Instances that render to nothing are dropped so
// every stored multiplier is load-bearing.
class Builder {
 public:
  Builder(const DemandTable& table, int case_id, const Target& target) : table_(table) {
    cert_.N = table.N;
    cert_.K = table.K;
    cert_.case_id = case_id;
    cert_.table = table.demands;
    cert_.target = target;
    F_ = VarSet::file_range(1, table.N - 1);
  }

  void add(Axiom ax, const Rational& mul = Rational(1)) {
    if (mul == Rational(0)) return;
    ensure(!validate(ax, cert_).has_value(), "generated axiom is malformed");
    if (render(ax, cert_).is_zero()) return;
    cert_.axioms.push_back({std::move(ax), mul});
  }

  const VarSet& F() const { return F_; }

  // M + |S| R >= H(F, Z_l, X_S): cache and rate bounds, subadditivity, then
  // decode every file of F from the demands in S.
  void bound(int l, const IdSet& S) {
    add(CacheBound{l});
    VarSet cur = Z(l);
    for (int d : S) {
      add(RateBound{d});
      add(Submodularity{cur, X({d})});
      cur = cur.with_bcast(d);
    }
    for (int d : S) {
      const int n = table_.at(d).of(l);
      if (n <= table_.N - 1 && !cur.has_file(n)) {
        add(Decodability{l, d, cur}, Rational(-1));
        cur = cur.with_file(n);
      }
    }
    ensure(cur == (F_ | Z(l) | X(S)), "demands in S do not reveal every file of F");
  }

  // H(F, X_{S+b_l}) + H(F, Z_l, X_T) >= H(F, X_{S&T}) + N.
  void merge(int l, const IdSet& S, const IdSet& T) {
    const int b = table_.b_of(l);
    ensure(std::find(S.begin(), S.end(), b) == S.end() && std::find(T.begin(), T.end(), b) == T.end(),
           "b_l inside merged sets");
    ensure(table_.at(b).of(l) == table_.N, "user l does not request the last file in b_l");
    const VarSet A = F_ | X(with_id(S, b));
    const VarSet B = F_ | Z(l) | X(T);
    add(Submodularity{A, B});
    add(Decodability{l, b, A | B}, Rational(-1));
    add(Totality{(A | B).with_file(table_.N)});
  }

  // H(F, Z_l, X_S) + sum_{j in T} H(X_j) + |T|/N H(Z_l) >= H(F, Z_l, X_{S+T}) + |T|.
  // The caller supplies the rate and cache bounds.
  void reduction(int l, const IdSet& S, const IdSet& T) {
    if (T.empty()) return;
    ensure(set_intersection(S, T).empty(), "reduction sets overlap");
    const int N = table_.N;
    const Rational w(static_cast<std::int64_t>(T.size()), N);
    const VarSet W1Z = VarSet{}.with_file(1).with_cache(l);

    for (int j : T) add(Submodularity{Z(l), X({j})});
    for (int j : T) {
      ensure(table_.at(j).of(l) == 1, "user l must request the first file throughout T");
      add(Decodability{l, j, Z(l) | X({j})}, Rational(-1));
    }
    VarSet acc = W1Z | X({T.front()});
    for (std::size_t q = 1; q < T.size(); ++q) {
      add(Submodularity{acc, W1Z | X({T[q]})});
      acc = acc | X({T[q]});
    }
    add(Submodularity{F_ | Z(l) | X(S), acc});

    for (int n = 2; n <= N; ++n) add(FileSymmetry{1, n, l}, w);
    VarSet files = W1Z;
    for (int n = 2; n <= N; ++n) {
      add(Submodularity{files, VarSet{}.with_file(n).with_cache(l)}, w);
      files = files.with_file(n);
    }
    add(Totality{files}, w);
  }

  void swap_users(int a, int b, const VarSet& S) {
    std::vector<int> perm(static_cast<std::size_t>(table_.K));
    for (int u = 1; u <= table_.K; ++u) perm[static_cast<std::size_t>(u - 1)] = u;
    std::swap(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(b - 1)]);
    add(PermSymmetry{perm, S});
  }

  void finish() {
    if (!F_.empty()) add(FileIndependence{F_});
  }

  Certificate take() { return std::move(cert_); }

 private:
  const DemandTable& table_;
  Certificate cert_;
  VarSet F_;
};

}  // namespace

Target theorem2_target(int N, int K) { return {Rational(K), Rational(K * (N - 1)), Rational(K * N - 1)}; }

Target theorem4_target(int N, int K) {
  return {Rational(K * (K + 1), 2 * N), Rational(K * (K - 1), 2), Rational(K * K + K - 2, 2)};
}

Rational bound_rate(const Target& t, const Rational& M) { return (t.c - t.cM * M) / t.cR; }

Certificate gen_certificate_theorem2(int N, int K) {
  if (!case1_valid(N, K)) {
    throw Error(ErrorCode::OutOfCaseRange, "case I needs ceil((K+1)/2) <= N <= K, got N=" + std::to_string(N) +
                                               " K=" + std::to_string(K));
  }
  const DemandTable table = build_demand_table_case1(N, K);
  Builder b(table, 1, theorem2_target(N, K));
  const VarSet& F = b.F();
  const int m = K - N;
  auto sets = [&](int i) { return build_sets_case1(N, K, i); };

  for (int i = 1; i <= N; ++i) {
    const auto s = sets(i);
    b.bound(i, set_union(s.A, s.B));
  }
  for (int i = 1; i <= m; ++i) {
    const auto s = sets(i);
    b.bound(i, set_union(s.J, s.C));
  }
  // Regroup to A_i+J and B_i+C_i, using C_i in A_i and B_i in J.
  for (int i = 1; i <= m; ++i) {
    const auto s = sets(i);
    b.add(Submodularity{F | Z(i) | X(set_union(s.A, s.B)), F | Z(i) | X(set_union(s.J, s.C))});
  }
  // J is inside B_i for the remaining users.
  for (int i = m + 1; i <= N; ++i) {
    const auto s = sets(i);
    b.add(Monotonicity{F | Z(i) | X(set_union(s.A, s.J)), F | Z(i) | X(set_union(s.A, s.B))});
  }
  const IdSet S1 = set_union(sets(1).A, sets(1).J);
  b.add(Monotonicity{F | X(S1), F | Z(1) | X(S1)});
  for (int i = 2; i <= N; ++i) {
    const auto s = sets(i);
    const IdSet Si = set_union(s.A, s.J);
    b.merge(i, Si, Si);
  }
  for (int i = 1; i <= m; ++i) {
    const auto s = sets(i);
    b.add(Monotonicity{F | Z(i) | X(s.B), F | Z(i) | X(set_union(s.B, s.C))});
    b.swap_users(i, N + i, F | Z(i) | X(s.B));
  }
  for (int i = m; i >= 1; --i) {
    const auto s = sets(i);
    b.merge(N + i, s.B, s.B);
  }
  b.finish();
  return b.take();
}

Certificate gen_certificate_theorem4(int N, int K) {
  if (!case2_valid(N, K)) {
    throw Error(ErrorCode::OutOfCaseRange, "case II needs N >= 2 and 2N-1 <= K, got N=" +
                                               std::to_string(N) + " K=" + std::to_string(K));
  }
  const DemandTable table = build_demand_table_case2(N, K);
  Builder b(table, 2, theorem4_target(N, K));
  const VarSet& F = b.F();
  const int g = K - 2 * N + 1;
  auto sets = [&](int i) { return build_sets_case2(N, K, i); };

  for (int i = 1; i <= N; ++i) {
    const auto s = sets(i);
    const IdSet AB = set_union(s.A, s.B);
    b.bound(i, AB);
    b.add(CacheBound{i}, Rational(g, N));
    for (int l : s.G) b.add(RateBound{l});
    b.reduction(i, AB, s.G);
  }
  for (int i = 1; i <= N - 1; ++i) {
    const auto s = sets(i);
    const IdSet BE = set_union(s.B, s.E);
    b.bound(i, BE);
    b.add(Submodularity{F | Z(i) | X(set_union(set_union(s.A, s.B), s.G)), F | Z(i) | X(BE)});
  }
  b.add(Monotonicity{F | X(sets(1).L), F | Z(1) | X(sets(1).L)});
  for (int i = 2; i <= N; ++i) b.merge(i, sets(i).L, sets(i).L);
  for (int i = 1; i <= N - 1; ++i) b.swap_users(i, N + i, F | Z(i) | X(sets(i).B));

  for (int j = 2 * N; j <= K; ++j) {
    const auto s = build_sets_case2_j(N, K, j);
    b.bound(j, s.P);
    b.add(CacheBound{j}, Rational(j - 2 * N, N));
    for (int l : s.Q) b.add(RateBound{l});
    b.reduction(j, s.P, s.Q);
  }
  for (int j = K; j >= 2 * N; --j) {
    const auto s = build_sets_case2_j(N, K, j);
    b.merge(j, s.T, s.T);
  }
  for (int i = N - 1; i >= 1; --i) b.merge(N + i, sets(i).B, sets(i).B);
  b.finish();
  return b.take();
}

TightnessReport tightness_check(int N, int K, int theorem) {
  TightnessReport r;
  r.N = N;
  r.K = K;
  r.theorem = theorem;
  if (theorem == 2) {
    if (!case1_valid(N, K)) throw Error(ErrorCode::OutOfCaseRange, "theorem 2 range");
    const auto [ma, ra] = scheme_point(N, K);
    r.M = ma;
    r.bound_R = bound_rate(theorem2_target(N, K), ma);
    r.achievable_R = ra;
    r.achiever = "new scheme";
  } else if (theorem == 4) {
    if (K < 2 || N < 1 || 2 * N > K + 2) throw Error(ErrorCode::OutOfCaseRange, "theorem 4 range");
    r.M = Rational(N * (K - 2), K);
    r.bound_R = bound_rate(theorem4_target(N, K), r.M);
    r.achievable_R = rate_yu(N, K, K - 2);
    r.achiever = "yu r=K-2";
  } else {
    throw Error(ErrorCode::OutOfCaseRange, "theorem must be 2 or 4");
  }
  r.tight = r.bound_R == r.achievable_R;
  return r;
}

}  // namespace cachewright::converse

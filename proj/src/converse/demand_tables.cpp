#include "cachewright/converse/demand_tables.hpp"

#include "cachewright/error.hpp"
#include "cachewright/tradeoff.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace cachewright::converse {

namespace {

std::string nk(int N, int K) { return "(N,K)=(" + std::to_string(N) + "," + std::to_string(K) + ")"; }

DemandTable shifts_of(int N, int K, std::vector<int> first) {
  DemandTable t{N, K, {}, {}};
  for (int l = 1; l <= K; ++l) {
    Demand d{std::vector<int>(static_cast<std::size_t>(K))};
    for (int u = 1; u <= K; ++u) {
      d.d[static_cast<std::size_t>(u - 1)] = first[static_cast<std::size_t>((u - 1 + l - 1) % K)];
    }
    t.demands.push_back(std::move(d));
  }
  for (int l = 1; l <= K; ++l) t.b.push_back(l <= N ? N - l + 1 : K + N - l + 1);
  return t;
}

}  // namespace

DemandTable build_demand_table_case1(int N, int K) {
  if (!case1_valid(N, K)) throw Error(ErrorCode::OutOfCaseRange, "case-I table needs ceil((K+1)/2) <= N <= K, " + nk(N, K));
  std::vector<int> first;
  for (int n = 1; n <= N; ++n) first.push_back(n);
  for (int n = 1; n <= K - N; ++n) first.push_back(n);
  return shifts_of(N, K, std::move(first));
}

DemandTable build_demand_table_case2(int N, int K) {
  if (N < 1 || 2 * N - 1 > K) throw Error(ErrorCode::OutOfCaseRange, "case-II table needs 2N-1 <= K, " + nk(N, K));
  std::vector<int> first;
  for (int n = 1; n <= N; ++n) first.push_back(n);
  for (int n = 1; n <= N - 1; ++n) first.push_back(n);
  for (int r = 0; r < K - 2 * N + 1; ++r) first.push_back(1);
  return shifts_of(N, K, std::move(first));
}

IdSet id_range(int lo, int hi) {
  IdSet out;
  for (int t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

IdSet set_union(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdSet set_intersection(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdSet with_id(const IdSet& a, int id) { return set_union(a, IdSet{id}); }

SetsCase1 build_sets_case1(int N, int K, int i) {
  if (!case1_valid(N, K)) throw Error(ErrorCode::OutOfCaseRange, nk(N, K));
  if (i < 1 || i > N) throw Error(ErrorCode::IndexOutOfRange, "i=" + std::to_string(i));
  return {id_range(1, N - i), id_range(K - i + 2, K), id_range(std::max(1, K - N - i + 2), N - i),
          id_range(N + 1, K)};
}

SetsCase2 build_sets_case2(int N, int K, int i) {
  if (N < 1 || 2 * N - 1 > K) throw Error(ErrorCode::OutOfCaseRange, nk(N, K));
  if (i < 1 || i > N) throw Error(ErrorCode::IndexOutOfRange, "i=" + std::to_string(i));
  SetsCase2 s{id_range(1, N - i), id_range(K - i + 2, K), id_range(N + 1, 2 * N - i),
              id_range(2 * N - i + 1, K - i + 1), {}};
  s.L = set_union(set_union(s.A, s.B), set_union(s.E, s.G));
  return s;
}

SetsCase2J build_sets_case2_j(int N, int K, int j) {
  if (N < 1 || 2 * N - 1 > K) throw Error(ErrorCode::OutOfCaseRange, nk(N, K));
  if (j < 2 * N || j > K) throw Error(ErrorCode::IndexOutOfRange, "j=" + std::to_string(j));
  SetsCase2J s{id_range(K + N - j + 2, K + 2 * N - j), id_range(K + 2 * N - j + 1, K), {}};
  s.T = set_union(s.P, s.Q);
  return s;
}

}  // namespace cachewright::converse

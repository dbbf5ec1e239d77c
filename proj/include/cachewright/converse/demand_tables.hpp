#pragma once

#include "cachewright/model.hpp"

#include <vector>

namespace cachewright::converse {

// K demands d_1..d_K (cyclic left shifts of d_1) and the map l -> id of b_l.
struct DemandTable {
  int N = 0;
  int K = 0;
  std::vector<Demand> demands;  // id t is demands[t-1]
  std::vector<int> b;           // b[l-1] = id of b_l

  const Demand& at(int id) const { return demands.at(static_cast<std::size_t>(id - 1)); }
  int b_of(int l) const { return b.at(static_cast<std::size_t>(l - 1)); }
};

/// d_1 = (1..N, 1..K-N). Requires N >= 2, 2N >= K+1, N <= K.
DemandTable build_demand_table_case1(int N, int K);
/// d_1 = (1..N, 1..N-1, 1 repeated K-2N+1 times). Requires 1 <= N and 2N-1 <= K.
DemandTable build_demand_table_case2(int N, int K);

// Demand-id sets, ascending.
using IdSet = std::vector<int>;

IdSet id_range(int lo, int hi);
IdSet set_union(const IdSet& a, const IdSet& b);
IdSet set_intersection(const IdSet& a, const IdSet& b);
IdSet with_id(const IdSet& a, int id);

struct SetsCase1 {
  IdSet A, B, C, J;
};
/// 1 <= i <= N, else IndexOutOfRange.
SetsCase1 build_sets_case1(int N, int K, int i);

struct SetsCase2 {
  IdSet A, B, E, G, L;
};
SetsCase2 build_sets_case2(int N, int K, int i);

struct SetsCase2J {
  IdSet P, Q, T;
};
/// 2N <= j <= K.
SetsCase2J build_sets_case2_j(int N, int K, int j);

}  // namespace cachewright::converse

#include "cachewright/scheme_new.hpp"

#include "cachewright/error.hpp"

#include <string>

namespace cachewright {

namespace {

std::size_t slot_of(int file, int pair, int K) {
  return static_cast<std::size_t>((file - 1) * pair_count(K) + pair);
}

void check_library(const Library& library, const NetworkConfig& cfg) {
  if (library.size() != static_cast<std::size_t>(cfg.N)) {
    throw Error(ErrorCode::ConfigMismatch,
                "library has " + std::to_string(library.size()) + " files, expected N=" + std::to_string(cfg.N));
  }
  for (const auto& grid : library) {
    if (grid.K != cfg.K || grid.pieces.size() != static_cast<std::size_t>(pair_count(cfg.K)) ||
        grid.L != library.front().L) {
      throw Error(ErrorCode::ConfigMismatch, "library grids disagree with the network layout");
    }
  }
}

void require_in_D(const Demand& demand, const NetworkConfig& cfg) {
  validate_demand(demand, cfg);
  if (!is_surjective(demand, cfg.N)) {
    throw Error(ErrorCode::DemandNotInD, "some file is requested by nobody");
  }
}

}  // namespace

const SymbolVec& CacheContents::subfile(int file, int i, int j) const {
  const int s = stage1_slot.at(slot_of(file, pair_index(i, j, K), K));
  if (s < 0) throw Error(ErrorCode::IndexOutOfRange, "subfile not cached by this user");
  return stage1[static_cast<std::size_t>(s)].data;
}

SymbolVec CacheContents::diff(int file, int j) const {
  if (j == successor(user, K)) return SymbolVec(L);
  const int s = diff_slot.at(static_cast<std::size_t>((file - 1) * K + (j - 1)));
  if (s < 0) throw Error(ErrorCode::IndexOutOfRange, "difference not cached by this user");
  return stage2_diffs[static_cast<std::size_t>(s)].data;
}

std::size_t Broadcast::symbol_count() const {
  std::size_t total = 0;
  for (const auto& p : packets) total += p.size();
  return total;
}

std::vector<CacheContents> place(const FieldCtx& field, const Library& library, const NetworkConfig& cfg) {
  check_library(library, cfg);
  const int N = cfg.N, K = cfg.K;
  const std::size_t L = library.front().L;

  std::vector<CacheContents> caches;
  caches.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    CacheContents c;
    c.user = k;
    c.N = N;
    c.K = K;
    c.L = L;
    for (const auto& g : library) c.original_lengths.push_back(g.original_length);
    c.stage1_slot.assign(static_cast<std::size_t>(N * pair_count(K)), -1);
    c.diff_slot.assign(static_cast<std::size_t>(N * K), -1);

    for (int n = 1; n <= N; ++n) {
      const auto& grid = library[static_cast<std::size_t>(n - 1)];
      for (int i = 1; i <= K; ++i) {
        for (int j = 1; j <= K; ++j) {
          if (i == j || i == k || j == k) continue;
          c.stage1_slot[slot_of(n, pair_index(i, j, K), K)] = static_cast<int>(c.stage1.size());
          c.stage1.push_back({n, i, j, grid.at(i, j)});
        }
      }
    }

    const int next = successor(k, K);
    c.stage2_sum.assign(L, Symbol{0});
    for (int n = 1; n <= N; ++n) {
      const auto& grid = library[static_cast<std::size_t>(n - 1)];
      for (int j = 1; j <= K; ++j) {
        if (j == k || j == next) continue;
        SymbolVec d = grid.at(k, next);
        field.sub_into(d, grid.at(k, j));
        c.diff_slot[static_cast<std::size_t>((n - 1) * K + (j - 1))] = static_cast<int>(c.stage2_diffs.size());
        c.stage2_diffs.push_back({n, j, std::move(d)});
      }
      field.add_into(c.stage2_sum, grid.at(k, next));
    }
    caches.push_back(std::move(c));
  }
  return caches;
}

Rational delivery_coeff(const DemandContext& ctx, int k, int s) {
  const int alpha = ctx.demand().of(k) == ctx.demand().of(s) ? -1 : 1;
  return Rational(alpha, ctx.count(k, s));
}

Broadcast deliver(const FieldCtx& field, const Library& library, const Demand& demand,
                  const NetworkConfig& cfg) {
  check_library(library, cfg);
  require_in_D(demand, cfg);
  const DemandContext ctx(demand, cfg);
  const std::size_t L = library.front().L;

  Broadcast b;
  b.demand = demand;
  for (int k = 1; k <= cfg.K; ++k) {
    SymbolVec x(L, Symbol{0});
    std::vector<PacketTerm> terms;
    for (int s : ctx.others(k)) {
      const int n = demand.of(s);
      const Rational q = delivery_coeff(ctx, k, s);
      field.axpy(x, q, library[static_cast<std::size_t>(n - 1)].at(k, s));
      terms.push_back({n, k, s, q});
    }
    b.packets.push_back(std::move(x));
    b.terms.push_back(std::move(terms));
  }
  return b;
}

SymbolVec decode_stage1_piece(const FieldCtx& field, const CacheContents& cache, const DemandContext& ctx,
                              int j, const SymbolVec& packet_j) {
  const int k = cache.user;
  SymbolVec rest = packet_j;
  for (int s : ctx.others(j)) {
    if (s == k) continue;
    field.axpy(rest, -delivery_coeff(ctx, j, s), cache.subfile(ctx.demand().of(s), j, s));
  }
  // Coefficient on W_{d_k}^{jk} inside X^j is alpha_j^k / N_j^k; invert it.
  return field.scaled(rest, Rational(1) / delivery_coeff(ctx, j, k));
}

std::vector<SymbolVec> decode_pieces(const FieldCtx& field, const CacheContents& cache,
                                     const Broadcast& broadcast, const NetworkConfig& cfg) {
  require_in_D(broadcast.demand, cfg);
  if (cache.N != cfg.N || cache.K != cfg.K) throw Error(ErrorCode::ConfigMismatch, "cache from another network");
  if (broadcast.packets.size() != static_cast<std::size_t>(cfg.K)) {
    throw Error(ErrorCode::LengthMismatch, "broadcast must carry K packets");
  }
  for (const auto& p : broadcast.packets) {
    if (p.size() != cache.L) throw Error(ErrorCode::LengthMismatch, "packet length differs from subfile length");
  }

  const DemandContext ctx(broadcast.demand, cfg);
  const int K = cfg.K, k = cache.user;
  const int want = ctx.demand().of(k);
  const int next = successor(k, K);
  std::vector<SymbolVec> pieces(static_cast<std::size_t>(pair_count(K)));

  for (int i = 1; i <= K; ++i) {
    for (int j = 1; j <= K; ++j) {
      if (i != j && i != k && j != k) pieces[static_cast<std::size_t>(pair_index(i, j, K))] = cache.subfile(want, i, j);
    }
  }

  for (int j : ctx.others(k)) {
    pieces[static_cast<std::size_t>(pair_index(j, k, K))] =
        decode_stage1_piece(field, cache, ctx, j, broadcast.packets[static_cast<std::size_t>(j - 1)]);
  }

  // Y = X^k + sum_s c_s D^s leaves sum_{n != d_k} W_n^{k,next} - I{N_k^k != 0} W_{d_k}^{k,next}.
  SymbolVec y = broadcast.packets[static_cast<std::size_t>(k - 1)];
  for (int s : ctx.others(k)) {
    if (s == next) continue;
    field.axpy(y, delivery_coeff(ctx, k, s), cache.diff(ctx.demand().of(s), s));
  }
  SymbolVec head = cache.stage2_sum;
  field.sub_into(head, y);
  const Rational divisor = ctx.count(k, k) != 0 ? Rational(2) : Rational(1);
  head = field.scaled(head, Rational(1) / divisor);

  for (int j : ctx.others(k)) {
    SymbolVec w = head;
    field.sub_into(w, cache.diff(want, j));
    pieces[static_cast<std::size_t>(pair_index(k, j, K))] = std::move(w);
  }
  return pieces;
}

Bytes decode(const FieldCtx& field, const CacheContents& cache, const Broadcast& broadcast,
             const NetworkConfig& cfg) {
  const auto pieces = decode_pieces(field, cache, broadcast, cfg);
  const int want = broadcast.demand.of(cache.user);
  return join_pieces(pieces, cache.original_lengths.at(static_cast<std::size_t>(want - 1)));
}

std::pair<Rational, Rational> scheme_point(int N, int K) {
  if (K < 2 || N < 1 || N > K) throw Error(ErrorCode::DegenerateInput, "scheme point needs 1 <= N <= K, K >= 2");
  const Rational inner = Rational(K - 2) + (Rational(K - 2) + Rational(1, N)) / Rational(K - 1);
  return {Rational(N, K) * inner, Rational(1, K - 1)};
}

Rational measured_memory(const CacheContents& cache) {
  return Rational(static_cast<std::int64_t>(cache.symbol_count()),
                  static_cast<std::int64_t>(pair_count(cache.K) * cache.L));
}

Rational measured_rate(const Broadcast& broadcast, const CacheContents& any_cache) {
  return Rational(static_cast<std::int64_t>(broadcast.symbol_count()),
                  static_cast<std::int64_t>(pair_count(any_cache.K) * any_cache.L));
}

}  // namespace cachewright

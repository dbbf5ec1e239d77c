#include "cachewright/scheme_baselines.hpp"

#include "cachewright/error.hpp"

#include <string>

namespace cachewright {

namespace {

void require_nondegenerate(const NetworkConfig& cfg) {
  if (cfg.K < 2) throw Error(ErrorCode::DegenerateInput, "MAN split is empty for K=1");
}

void check_library(const Library& library, const NetworkConfig& cfg) {
  require_nondegenerate(cfg);
  if (library.size() != static_cast<std::size_t>(cfg.N)) {
    throw Error(ErrorCode::ConfigMismatch, "library size differs from N");
  }
  for (const auto& g : library) {
    if (g.pieces.size() != static_cast<std::size_t>(cfg.K) || g.L != library.front().L) {
      throw Error(ErrorCode::ConfigMismatch, "library not split into K equal parts");
    }
  }
}

}  // namespace

const SymbolVec& ManCache::part(int file, int missing) const {
  if (missing == user || missing < 1 || missing > K || file < 1 || file > N) {
    throw Error(ErrorCode::IndexOutOfRange, "part not cached by this user");
  }
  const int idx = missing < user ? missing - 1 : missing - 2;
  return parts.at(static_cast<std::size_t>((file - 1) * (K - 1) + idx)).data;
}

SubfileGrid man_split(const FieldCtx& field, std::span<const std::uint8_t> bytes, const NetworkConfig& cfg) {
  require_nondegenerate(cfg);
  return split_into(field, bytes, cfg.K, cfg.K);
}

std::vector<ManCache> man_place(const Library& library, const NetworkConfig& cfg) {
  check_library(library, cfg);
  std::vector<ManCache> caches;
  for (int k = 1; k <= cfg.K; ++k) {
    ManCache c{k, cfg.N, cfg.K, library.front().L, {}, {}};
    for (const auto& g : library) c.original_lengths.push_back(g.original_length);
    for (int n = 1; n <= cfg.N; ++n) {
      for (int m = 1; m <= cfg.K; ++m) {
        if (m != k) c.parts.push_back({n, m, library[static_cast<std::size_t>(n - 1)].pieces[static_cast<std::size_t>(m - 1)]});
      }
    }
    caches.push_back(std::move(c));
  }
  return caches;
}

ManPacket man_deliver(const FieldCtx& field, const Library& library, const Demand& demand, const NetworkConfig& cfg) {
  check_library(library, cfg);
  validate_demand(demand, cfg);
  ManPacket packet{demand, SymbolVec(library.front().L, Symbol{0})};
  for (int k = 1; k <= cfg.K; ++k) {
    field.add_into(packet.data, library[static_cast<std::size_t>(demand.of(k) - 1)].pieces[static_cast<std::size_t>(k - 1)]);
  }
  return packet;
}

Bytes man_decode(const FieldCtx& field, const ManCache& cache, const ManPacket& packet) {
  if (packet.demand.d.size() != static_cast<std::size_t>(cache.K)) {
    throw Error(ErrorCode::ConfigMismatch, "demand length differs from K");
  }
  if (packet.data.size() != cache.L) throw Error(ErrorCode::LengthMismatch, "packet length differs from part length");
  const int k = cache.user;
  const int want = packet.demand.of(k);

  SymbolVec own = packet.data;
  for (int u = 1; u <= cache.K; ++u) {
    if (u != k) field.sub_into(own, cache.part(packet.demand.of(u), u));
  }

  std::vector<SymbolVec> pieces;
  for (int m = 1; m <= cache.K; ++m) pieces.push_back(m == k ? own : cache.part(want, m));
  return join_pieces(pieces, cache.original_lengths.at(static_cast<std::size_t>(want - 1)));
}

Rational man_measured_memory(const ManCache& cache) {
  return Rational(static_cast<std::int64_t>(cache.symbol_count()), static_cast<std::int64_t>(cache.K * cache.L));
}

Rational man_measured_rate(const ManPacket& packet, const ManCache& any_cache) {
  return Rational(static_cast<std::int64_t>(packet.data.size()), static_cast<std::int64_t>(any_cache.K * any_cache.L));
}

Rational yu_memory(int N, int K, int r) { return Rational(N * r, K); }

Rational rate_yu(int N, int K, int r) {
  if (r < 0 || r > K) throw Error(ErrorCode::OutOfRange, "r=" + std::to_string(r) + " outside [0,K]");
  return (binomial(K, r + 1) - binomial(K - N, r + 1)) / binomial(K, r);
}

Rational rate_chen(int N, int K, const Rational& M) {
  if (M < 0 || M > Rational(1, K)) throw Error(ErrorCode::OutOfRange, "Chen region is 0 <= M <= 1/K");
  return Rational(N) - N * M;
}

Rational rate_gomez(int N, const Rational& M) {
  if (N < 2) throw Error(ErrorCode::OutOfRange, "needs N >= 2");
  if (M < Rational(1, N) || M > Rational(1, N - 1)) {
    throw Error(ErrorCode::OutOfRange, "region is 1/N <= M <= 1/(N-1)");
  }
  return Rational(N * N - 1, N) - (N - 1) * M;
}

Rational rate_man_line(int N, int K, const Rational& M) {
  if (M < Rational(N * (K - 1), K) || M > Rational(N)) {
    throw Error(ErrorCode::OutOfRange, "region is N(K-1)/K <= M <= N");
  }
  return Rational(1) - M / N;
}

}  // namespace cachewright

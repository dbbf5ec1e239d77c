#include "cachewright/model.hpp"

#include "cachewright/error.hpp"

#include <string>

namespace cachewright {

NetworkConfig make_config(int N, int K, std::optional<std::uint32_t> p) {
  if (K < 1 || N < 1 || N > K) {
    throw Error(ErrorCode::ConfigMismatch,
                "need 1 <= N <= K, got N=" + std::to_string(N) + " K=" + std::to_string(K));
  }
  const std::uint32_t modulus = p.value_or(default_modulus(K));
  make_field(modulus);
  if (modulus <= static_cast<std::uint32_t>(K)) {
    throw Error(ErrorCode::ConfigMismatch,
                "modulus " + std::to_string(modulus) + " must exceed K=" + std::to_string(K));
  }
  return NetworkConfig{N, K, modulus};
}

int pair_index(int i, int j, int K) {
  if (i < 1 || i > K || j < 1 || j > K || i == j) {
    throw Error(ErrorCode::IndexOutOfRange,
                "pair (" + std::to_string(i) + "," + std::to_string(j) + ") for K=" + std::to_string(K));
  }
  return (i - 1) * (K - 1) + (j < i ? j - 1 : j - 2);
}

SubfileGrid split_into(const FieldCtx& field, std::span<const std::uint8_t> bytes, int K, int parts) {
  if (parts < 1) throw Error(ErrorCode::DegenerateInput, "cannot split into zero pieces");
  const auto P = static_cast<std::size_t>(parts);
  SubfileGrid grid;
  grid.K = K;
  grid.original_length = bytes.size();
  grid.L = bytes.empty() ? 1 : (bytes.size() + P - 1) / P;

  SymbolVec symbols = encode_bytes(field, bytes);
  symbols.resize(grid.L * P, Symbol{0});
  grid.pieces.reserve(P);
  for (std::size_t q = 0; q < P; ++q) {
    grid.pieces.emplace_back(symbols.begin() + static_cast<std::ptrdiff_t>(q * grid.L),
                             symbols.begin() + static_cast<std::ptrdiff_t>((q + 1) * grid.L));
  }
  return grid;
}

SubfileGrid split_file(const FieldCtx& field, std::span<const std::uint8_t> bytes, const NetworkConfig& cfg) {
  if (cfg.K < 2) throw Error(ErrorCode::DegenerateInput, "pair split needs K >= 2");
  return split_into(field, bytes, cfg.K, pair_count(cfg.K));
}

Bytes join_pieces(const std::vector<SymbolVec>& pieces, std::size_t original_length) {
  SymbolVec all;
  for (const auto& piece : pieces) all.insert(all.end(), piece.begin(), piece.end());
  if (all.size() < original_length) throw Error(ErrorCode::LengthMismatch, "pieces shorter than original");
  all.resize(original_length);
  return decode_bytes(all);
}

Bytes join_file(const SubfileGrid& grid) { return join_pieces(grid.pieces, grid.original_length); }

void validate_demand(const Demand& demand, const NetworkConfig& cfg) {
  if (demand.d.size() != static_cast<std::size_t>(cfg.K)) {
    throw Error(ErrorCode::ConfigMismatch, "demand length " + std::to_string(demand.d.size()) +
                                               " != K=" + std::to_string(cfg.K));
  }
  for (int n : demand.d) {
    if (n < 1 || n > cfg.N) throw Error(ErrorCode::OutOfRange, "file index " + std::to_string(n));
  }
}

bool is_surjective(const Demand& demand, int N) {
  std::vector<bool> seen(static_cast<std::size_t>(N) + 1, false);
  for (int n : demand.d) {
    if (n >= 1 && n <= N) seen[static_cast<std::size_t>(n)] = true;
  }
  for (int n = 1; n <= N; ++n) {
    if (!seen[static_cast<std::size_t>(n)]) return false;
  }
  return true;
}

std::vector<Demand> enumerate_demands(const NetworkConfig& cfg) {
  std::vector<Demand> out;
  Demand cur{std::vector<int>(static_cast<std::size_t>(cfg.K), 1)};
  while (true) {
    if (is_surjective(cur, cfg.N)) out.push_back(cur);
    // Odometer increment, last position fastest.
    int pos = cfg.K - 1;
    while (pos >= 0 && cur.d[static_cast<std::size_t>(pos)] == cfg.N) {
      cur.d[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++cur.d[static_cast<std::size_t>(pos)];
  }
  return out;
}

DemandContext::DemandContext(Demand demand, const NetworkConfig& cfg)
    : demand_(std::move(demand)), K_(cfg.K) {
  validate_demand(demand_, cfg);
  counts_.assign(static_cast<std::size_t>(K_ * K_), 0);
  for (int k = 1; k <= K_; ++k) {
    for (int s = 1; s <= K_; ++s) {
      int c = 0;
      for (int u = 1; u <= K_; ++u) {
        if (u != k && demand_.of(u) == demand_.of(s)) ++c;
      }
      counts_[index(k, s)] = c;
    }
  }
}

std::vector<int> DemandContext::others(int k) const {
  std::vector<int> s;
  for (int u = 1; u <= K_; ++u) {
    if (u != k) s.push_back(u);
  }
  return s;
}

}  // namespace cachewright

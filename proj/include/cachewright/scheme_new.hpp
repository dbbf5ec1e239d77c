#pragma once

#include "cachewright/field.hpp"
#include "cachewright/model.hpp"
#include "cachewright/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cachewright {

struct Stage1Packet {
  int file, i, j;
  SymbolVec data;
};

// W_file^{k,succ(k)} - W_file^{k,j}
struct DiffPacket {
  int file, j;
  SymbolVec data;
};

struct CacheContents {
  int user = 0;
  int N = 0;
  int K = 0;
  std::size_t L = 0;
  std::vector<std::size_t> original_lengths;  // per file, for trimming padding
  std::vector<Stage1Packet> stage1;
  std::vector<DiffPacket> stage2_diffs;
  SymbolVec stage2_sum;

  const SymbolVec& subfile(int file, int i, int j) const;
  /// Zero vector when j == succ(user).
  SymbolVec diff(int file, int j) const;
  std::size_t packet_count() const { return stage1.size() + stage2_diffs.size() + 1; }
  std::size_t symbol_count() const { return packet_count() * L; }

  // Slot tables filled by place(); -1 marks "not cached".
  std::vector<int> stage1_slot;
  std::vector<int> diff_slot;
};

// One summand of a delivery packet, kept for inspection only.
struct PacketTerm {
  int file, i, j;
  Rational coeff;
};

struct Broadcast {
  Demand demand;
  std::vector<SymbolVec> packets;              // X_d^1 .. X_d^K
  std::vector<std::vector<PacketTerm>> terms;  // linear form of each packet

  std::size_t symbol_count() const;
};

std::vector<CacheContents> place(const FieldCtx& field, const Library& library, const NetworkConfig& cfg);

/// alpha_k^s / N_k^s for s != k.
Rational delivery_coeff(const DemandContext& ctx, int k, int s);

Broadcast deliver(const FieldCtx& field, const Library& library, const Demand& demand,
                  const NetworkConfig& cfg);

/// W_{d_k}^{jk} from X_d^j and stage-1 cache packets only.
SymbolVec decode_stage1_piece(const FieldCtx& field, const CacheContents& cache, const DemandContext& ctx,
                              int j, const SymbolVec& packet_j);

/// All K(K-1) pieces of the requested file, canonical order.
std::vector<SymbolVec> decode_pieces(const FieldCtx& field, const CacheContents& cache,
                                     const Broadcast& broadcast, const NetworkConfig& cfg);

Bytes decode(const FieldCtx& field, const CacheContents& cache, const Broadcast& broadcast,
             const NetworkConfig& cfg);

/// (M_A, 1/(K-1)) from the closed form.
std::pair<Rational, Rational> scheme_point(int N, int K);

/// Cache and broadcast sizes in file units, measured from actual symbol counts.
Rational measured_memory(const CacheContents& cache);
Rational measured_rate(const Broadcast& broadcast, const CacheContents& any_cache);

}  // namespace cachewright

#pragma once

#include "cachewright/field.hpp"
#include "cachewright/model.hpp"
#include "cachewright/rational.hpp"

#include <vector>

namespace cachewright {

// MAN corner scheme at M = N(K-1)/K. File n is cut into K parts; part m is the
// subfile labelled by the (K-1)-subset [K]\{m}, so user k holds every part m != k.
struct ManPart {
  int file, missing;
  SymbolVec data;
};

struct ManCache {
  int user = 0;
  int N = 0;
  int K = 0;
  std::size_t L = 0;
  std::vector<std::size_t> original_lengths;
  std::vector<ManPart> parts;

  const SymbolVec& part(int file, int missing) const;
  std::size_t symbol_count() const { return parts.size() * L; }
};

struct ManPacket {
  Demand demand;
  SymbolVec data;
};

/// K-part split used by the MAN scheme.
SubfileGrid man_split(const FieldCtx& field, std::span<const std::uint8_t> bytes, const NetworkConfig& cfg);

std::vector<ManCache> man_place(const Library& library, const NetworkConfig& cfg);
ManPacket man_deliver(const FieldCtx& field, const Library& library, const Demand& demand, const NetworkConfig& cfg);
Bytes man_decode(const FieldCtx& field, const ManCache& cache, const ManPacket& packet);

Rational man_measured_memory(const ManCache& cache);
Rational man_measured_rate(const ManPacket& packet, const ManCache& any_cache);

// Closed-form rates. All exact.
Rational yu_memory(int N, int K, int r);
Rational rate_yu(int N, int K, int r);
Rational rate_chen(int N, int K, const Rational& M);
Rational rate_gomez(int N, const Rational& M);
/// 1 - M/N on [N(K-1)/K, N].
Rational rate_man_line(int N, int K, const Rational& M);

}  // namespace cachewright

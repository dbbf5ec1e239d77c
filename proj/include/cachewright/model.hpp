#pragma once

#include "cachewright/field.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cachewright {

// Users and files are 1-based throughout the public API.
struct NetworkConfig {
  int N = 0;  // files
  int K = 0;  // users
  std::uint32_t p = 257;
};

/// Validates 1 <= N <= K and that p is an odd prime above K. A missing p picks
/// default_modulus(K).
NetworkConfig make_config(int N, int K, std::optional<std::uint32_t> p = std::nullopt);

inline int pair_count(int K) { return K * (K - 1); }

/// Position of W^{ij} in canonical lexicographic order, 0-based.
int pair_index(int i, int j, int K);

// One file cut into equal-length pieces. The new scheme uses K(K-1) pieces
// indexed by ordered pairs; the MAN baseline reuses the layout with K pieces.
struct SubfileGrid {
  int K = 0;
  std::size_t L = 0;
  std::size_t original_length = 0;
  std::vector<SymbolVec> pieces;

  const SymbolVec& at(int i, int j) const { return pieces.at(pair_index(i, j, K)); }
  std::size_t symbol_count() const { return pieces.size() * L; }
};

using Library = std::vector<SubfileGrid>;

/// Splits into `parts` equal pieces after zero padding, minimum length 1.
SubfileGrid split_into(const FieldCtx& field, std::span<const std::uint8_t> bytes, int K, int parts);
SubfileGrid split_file(const FieldCtx& field, std::span<const std::uint8_t> bytes, const NetworkConfig& cfg);
/// Concatenates pieces and truncates to original_length.
Bytes join_file(const SubfileGrid& grid);
/// Reassembles bytes from already recovered pieces in canonical order.
Bytes join_pieces(const std::vector<SymbolVec>& pieces, std::size_t original_length);

struct Demand {
  std::vector<int> d;

  int of(int user) const { return d.at(static_cast<std::size_t>(user - 1)); }
  friend auto operator<=>(const Demand&, const Demand&) = default;
};

/// Checks length and entry range. Throws ConfigMismatch / OutOfRange.
void validate_demand(const Demand& demand, const NetworkConfig& cfg);
bool is_surjective(const Demand& demand, int N);

/// Every surjective demand, in lexicographic order.
std::vector<Demand> enumerate_demands(const NetworkConfig& cfg);

class DemandContext {
 public:
  DemandContext(Demand demand, const NetworkConfig& cfg);

  const Demand& demand() const { return demand_; }
  /// |{u in S_k : d_u = d_s}|. Defined for any s, so count(k, k) may be 0.
  int count(int k, int s) const { return counts_[index(k, s)]; }
  /// S_k = [K] \ {k}, ascending.
  std::vector<int> others(int k) const;
  int K() const { return K_; }

 private:
  std::size_t index(int k, int s) const {
    return static_cast<std::size_t>((k - 1) * K_ + (s - 1));
  }

  Demand demand_;
  int K_;
  std::vector<int> counts_;
};

inline int successor(int k, int K) { return k == K ? 1 : k + 1; }

}  // namespace cachewright

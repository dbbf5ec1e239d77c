#pragma once

#include "cachewright/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cachewright {

// Element of Z_p. The value is kept canonical (value < p) by FieldCtx.
struct Symbol {
  std::uint32_t value = 0;

  friend bool operator==(Symbol, Symbol) = default;
};

using SymbolVec = std::vector<Symbol>;
using Bytes = std::vector<std::uint8_t>;

// Largest modulus whose symbols still fit the two-byte coded wire format.
inline constexpr std::uint32_t kMaxModulus = 65521;

class FieldCtx {
 public:
  std::uint32_t modulus() const noexcept { return p_; }

  Symbol add(Symbol a, Symbol b) const noexcept;
  Symbol sub(Symbol a, Symbol b) const noexcept;
  Symbol mul(Symbol a, Symbol b) const noexcept;
  Symbol neg(Symbol a) const noexcept;
  Symbol inv(Symbol a) const;
  /// a * u * v^{-1} for q = u/v; the denominator must be a unit mod p.
  Symbol scale(Symbol a, const Rational& q) const;
  /// Reduces a rational into the field (u * v^{-1} mod p).
  Symbol reduce(const Rational& q) const;
  Symbol from_int(std::int64_t x) const noexcept;

  // acc += q * x, elementwise. Lengths must agree.
  void axpy(SymbolVec& acc, const Rational& q, std::span<const Symbol> x) const;
  void add_into(SymbolVec& acc, std::span<const Symbol> x) const;
  void sub_into(SymbolVec& acc, std::span<const Symbol> x) const;
  SymbolVec scaled(std::span<const Symbol> x, const Rational& q) const;

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  friend FieldCtx make_field(std::uint64_t p);
  explicit FieldCtx(std::uint32_t p) : p_(p) {}

  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Validates p (odd prime, at most kMaxModulus) and returns its context.
FieldCtx make_field(std::uint64_t p);

/// 257 while it exceeds the user count, otherwise the smallest odd prime above it.
std::uint32_t default_modulus(int users);

/// One symbol per byte; requires p >= 257.
SymbolVec encode_bytes(const FieldCtx& field, std::span<const std::uint8_t> bytes);
/// Inverse of encode_bytes. A symbol >= 256 throws SymbolOutOfByteRange.
Bytes decode_bytes(std::span<const Symbol> symbols);

// Wire formats: coded symbols are two bytes each (big-endian), plain symbols one.
Bytes serialize_coded(std::span<const Symbol> symbols);
SymbolVec deserialize_coded(const FieldCtx& field, std::span<const std::uint8_t> bytes);
Bytes serialize_plain(std::span<const Symbol> symbols);

}  // namespace cachewright

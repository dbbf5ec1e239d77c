#include "cachewright/field.hpp"

#include "cachewright/error.hpp"

#include <string>

namespace cachewright {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldCtx make_field(std::uint64_t p) {
  if (p == 2) throw Error(ErrorCode::EvenModulus, "characteristic 2 cannot divide by 2");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxModulus) {
    throw Error(ErrorCode::OutOfRange,
                "modulus " + std::to_string(p) + " does not fit the two-byte symbol format");
  }
  return FieldCtx(static_cast<std::uint32_t>(p));
}

std::uint32_t default_modulus(int users) {
  if (users < 257) return 257;
  std::uint32_t p = static_cast<std::uint32_t>(users) + 1;
  while (p % 2 == 0 || !is_prime(p)) ++p;
  return p;
}

Symbol FieldCtx::from_int(std::int64_t x) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  auto r = x % p;
  if (r < 0) r += p;
  return Symbol{static_cast<std::uint32_t>(r)};
}

Symbol FieldCtx::add(Symbol a, Symbol b) const noexcept {
  const auto s = a.value + b.value;
  return Symbol{s >= p_ ? s - p_ : s};
}

Symbol FieldCtx::sub(Symbol a, Symbol b) const noexcept {
  return Symbol{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
}

Symbol FieldCtx::mul(Symbol a, Symbol b) const noexcept {
  return Symbol{static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(a.value) * b.value % p_)};
}

Symbol FieldCtx::neg(Symbol a) const noexcept {
  return Symbol{a.value == 0 ? 0 : p_ - a.value};
}

Symbol FieldCtx::inv(Symbol a) const {
  if (a.value % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t base = a.value, result = 1, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Symbol{static_cast<std::uint32_t>(result)};
}

Symbol FieldCtx::reduce(const Rational& q) const {
  const Symbol den = from_int(q.denominator());
  if (den.value == 0) {
    throw Error(ErrorCode::DivisionByZero,
                "denominator " + std::to_string(q.denominator()) + " vanishes mod " +
                    std::to_string(p_));
  }
  return mul(from_int(q.numerator()), inv(den));
}

Symbol FieldCtx::scale(Symbol a, const Rational& q) const { return mul(a, reduce(q)); }

void FieldCtx::axpy(SymbolVec& acc, const Rational& q, std::span<const Symbol> x) const {
  if (acc.size() != x.size()) throw Error(ErrorCode::LengthMismatch, "axpy operands differ in length");
  const Symbol c = reduce(q);
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] = add(acc[i], mul(c, x[i]));
}

void FieldCtx::add_into(SymbolVec& acc, std::span<const Symbol> x) const {
  if (acc.size() != x.size()) throw Error(ErrorCode::LengthMismatch, "add operands differ in length");
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] = add(acc[i], x[i]);
}

void FieldCtx::sub_into(SymbolVec& acc, std::span<const Symbol> x) const {
  if (acc.size() != x.size()) throw Error(ErrorCode::LengthMismatch, "sub operands differ in length");
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] = sub(acc[i], x[i]);
}

SymbolVec FieldCtx::scaled(std::span<const Symbol> x, const Rational& q) const {
  const Symbol c = reduce(q);
  SymbolVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mul(c, x[i]);
  return out;
}

SymbolVec encode_bytes(const FieldCtx& field, std::span<const std::uint8_t> bytes) {
  if (field.modulus() < 257) {
    throw Error(ErrorCode::OutOfRange, "byte encoding needs p >= 257");
  }
  SymbolVec out;
  out.reserve(bytes.size());
  for (auto b : bytes) out.push_back(Symbol{b});
  return out;
}

Bytes decode_bytes(std::span<const Symbol> symbols) {
  Bytes out;
  out.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i].value > 255) {
      throw Error(ErrorCode::SymbolOutOfByteRange,
                  "symbol " + std::to_string(symbols[i].value) + " at offset " + std::to_string(i));
    }
    out.push_back(static_cast<std::uint8_t>(symbols[i].value));
  }
  return out;
}

Bytes serialize_coded(std::span<const Symbol> symbols) {
  Bytes out;
  out.reserve(symbols.size() * 2);
  for (auto s : symbols) {
    out.push_back(static_cast<std::uint8_t>(s.value >> 8));
    out.push_back(static_cast<std::uint8_t>(s.value & 0xFF));
  }
  return out;
}

SymbolVec deserialize_coded(const FieldCtx& field, std::span<const std::uint8_t> bytes) {
  if (bytes.size() % 2 != 0) throw Error(ErrorCode::LengthMismatch, "odd coded byte count");
  SymbolVec out;
  out.reserve(bytes.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); i += 2) {
    const std::uint32_t v = (std::uint32_t{bytes[i]} << 8) | bytes[i + 1];
    if (v >= field.modulus()) {
      throw Error(ErrorCode::OutOfRange, "coded symbol " + std::to_string(v) + " exceeds modulus");
    }
    out.push_back(Symbol{v});
  }
  return out;
}

Bytes serialize_plain(std::span<const Symbol> symbols) { return decode_bytes(symbols); }

}  // namespace cachewright

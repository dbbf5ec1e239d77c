#include "cachewright/converse/entropy.hpp"

#include "cachewright/error.hpp"

#include <charconv>

namespace cachewright::converse {

namespace {

std::uint64_t bit(int index) {
  if (index < 1 || index > 64) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(index));
  return std::uint64_t{1} << (index - 1);
}

void append_bits(std::vector<RandomVar>& out, std::uint64_t mask, RandomVar::Kind kind) {
  for (int i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) out.push_back({kind, i + 1});
  }
}

}  // namespace

VarSet VarSet::of(std::initializer_list<RandomVar> vars) {
  VarSet s;
  for (const auto& v : vars) s.add(v);
  return s;
}

VarSet VarSet::file_range(int lo, int hi) {
  VarSet s;
  for (int n = lo; n <= hi; ++n) s.files |= bit(n);
  return s;
}

VarSet VarSet::bcast_ids(const std::vector<int>& ids) {
  VarSet s;
  for (int d : ids) s.bcasts |= bit(d);
  return s;
}

VarSet& VarSet::add(RandomVar v) {
  switch (v.kind) {
    case RandomVar::Kind::File: files |= bit(v.index); break;
    case RandomVar::Kind::Cache: caches |= bit(v.index); break;
    case RandomVar::Kind::Bcast: bcasts |= bit(v.index); break;
  }
  return *this;
}

VarSet VarSet::with_file(int n) const { return VarSet(*this).add({RandomVar::Kind::File, n}); }
VarSet VarSet::with_cache(int l) const { return VarSet(*this).add({RandomVar::Kind::Cache, l}); }
VarSet VarSet::with_bcast(int d) const { return VarSet(*this).add({RandomVar::Kind::Bcast, d}); }

std::vector<RandomVar> VarSet::members() const {
  std::vector<RandomVar> out;
  append_bits(out, files, RandomVar::Kind::File);
  append_bits(out, caches, RandomVar::Kind::Cache);
  append_bits(out, bcasts, RandomVar::Kind::Bcast);
  return out;
}

std::string to_string(const VarSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s.members()) {
    if (!first) out += ',';
    first = false;
    out += v.kind == RandomVar::Kind::File ? 'W' : v.kind == RandomVar::Kind::Cache ? 'Z' : 'X';
    out += std::to_string(v.index);
  }
  return out + "}";
}

VarSet parse_varset(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error(ErrorCode::ParseError, "variable set must be braced: " + text);
  }
  VarSet s;
  const std::string body = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string::npos) end = body.size();
    const std::string tok = body.substr(pos, end - pos);
    if (tok.size() < 2) throw Error(ErrorCode::ParseError, "bad variable '" + tok + "'");
    int idx = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::ParseError, "bad variable index '" + tok + "'");
    }
    switch (tok[0]) {
      case 'W': s.add({RandomVar::Kind::File, idx}); break;
      case 'Z': s.add({RandomVar::Kind::Cache, idx}); break;
      case 'X': s.add({RandomVar::Kind::Bcast, idx}); break;
      default: throw Error(ErrorCode::ParseError, "unknown variable kind '" + tok + "'");
    }
    pos = end + 1;
  }
  return s;
}

LinComb& LinComb::add_entropy(const VarSet& s, const Rational& c) {
  if (s.empty() || c == Rational(0)) return *this;
  auto [it, inserted] = terms.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Rational(0)) terms.erase(it);
  }
  return *this;
}

LinComb& LinComb::add_scaled(const LinComb& other, const Rational& c) {
  if (c == Rational(0)) return *this;
  for (const auto& [s, q] : other.terms) add_entropy(s, q * c);
  cM += other.cM * c;
  cR += other.cR * c;
  c0 += other.c0 * c;
  return *this;
}

std::string to_string(const LinComb& e) {
  std::string out;
  auto emit = [&](const Rational& q, const std::string& what) {
    if (q == Rational(0)) return;
    const bool neg = q < 0;
    const Rational mag = neg ? -q : q;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (what.empty()) {
      out += to_short_string(mag);
    } else {
      if (mag != Rational(1)) out += to_short_string(mag) + "*";
      out += what;
    }
  };
  for (const auto& [s, q] : e.terms) emit(q, "H" + to_string(s));
  emit(e.cM, "M");
  emit(e.cR, "R");
  emit(e.c0, "");
  return out.empty() ? "0" : out;
}

}  // namespace cachewright::converse

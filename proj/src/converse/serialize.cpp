#include "cachewright/converse/serialize.hpp"

#include "cachewright/error.hpp"

#include <sstream>
#include <vector>

namespace cachewright::converse {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string params(const Axiom& ax) {
  return std::visit(overloaded{
                        [](const Submodularity& a) { return to_string(a.A) + " " + to_string(a.B); },
                        [](const Monotonicity& a) { return to_string(a.sub) + " " + to_string(a.sup); },
                        [](const Decodability& a) {
                          return std::to_string(a.user) + " " + std::to_string(a.demand) + " " + to_string(a.S);
                        },
                        [](const Totality& a) { return to_string(a.S); },
                        [](const CacheBound& a) { return std::to_string(a.user); },
                        [](const RateBound& a) { return std::to_string(a.demand); },
                        [](const FileIndependence& a) { return to_string(a.S); },
                        [](const PermSymmetry& a) {
                          std::string p;
                          for (int v : a.perm) p += (p.empty() ? "" : ",") + std::to_string(v);
                          return p + " " + to_string(a.S);
                        },
                        [](const FileSymmetry& a) {
                          return std::to_string(a.n) + " " + std::to_string(a.p) + " " + std::to_string(a.user);
                        },
                    },
                    ax);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

int to_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) fail(line, "bad integer '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "bad integer '" + tok + "'");
  }
}

std::vector<int> int_list(const std::string& tok, int line) {
  std::vector<int> out;
  std::stringstream ss(tok);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(to_int(part, line));
  return out;
}

Axiom parse_axiom(const std::vector<std::string>& t, int line) {
  // t = kind, params..., excluding "AX" and the MUL suffix.
  const std::string& k = t[0];
  auto need = [&](std::size_t n) {
    if (t.size() != n + 1) fail(line, k + " expects " + std::to_string(n) + " parameters");
  };
  if (k == "Submod") { need(2); return Submodularity{parse_varset(t[1]), parse_varset(t[2])}; }
  if (k == "Mono") { need(2); return Monotonicity{parse_varset(t[1]), parse_varset(t[2])}; }
  if (k == "Decod") { need(3); return Decodability{to_int(t[1], line), to_int(t[2], line), parse_varset(t[3])}; }
  if (k == "Total") { need(1); return Totality{parse_varset(t[1])}; }
  if (k == "CacheBound") { need(1); return CacheBound{to_int(t[1], line)}; }
  if (k == "RateBound") { need(1); return RateBound{to_int(t[1], line)}; }
  if (k == "FileIndep") { need(1); return FileIndependence{parse_varset(t[1])}; }
  if (k == "PermSym") { need(2); return PermSymmetry{int_list(t[1], line), parse_varset(t[2])}; }
  if (k == "FileSym") { need(3); return FileSymmetry{to_int(t[1], line), to_int(t[2], line), to_int(t[3], line)}; }
  fail(line, "unknown axiom kind '" + k + "'");
}

}  // namespace

std::string serialize(const Certificate& cert) {
  std::ostringstream out;
  out << "NK " << cert.N << ' ' << cert.K << " CASE " << cert.case_id << '\n';
  for (std::size_t t = 0; t < cert.table.size(); ++t) {
    out << "D " << t + 1;
    for (int n : cert.table[t].d) out << ' ' << n;
    out << '\n';
  }
  for (const auto& [ax, mul] : cert.axioms) {
    out << "AX " << kind_name(ax) << ' ' << params(ax) << " MUL " << to_fraction_string(mul) << '\n';
  }
  out << "TARGET " << to_fraction_string(cert.target.cM) << " M + " << to_fraction_string(cert.target.cR)
      << " R >= " << to_fraction_string(cert.target.c) << '\n';
  return out.str();
}

Certificate parse_certificate(const std::string& text) {
  Certificate cert;
  bool have_header = false, have_target = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty() || tok[0][0] == '#') continue;

    if (tok[0] == "NK") {
      if (tok.size() != 5 || tok[3] != "CASE") fail(line, "header is 'NK <N> <K> CASE <c>'");
      cert.N = to_int(tok[1], line);
      cert.K = to_int(tok[2], line);
      cert.case_id = to_int(tok[4], line);
      have_header = true;
    } else if (tok[0] == "D") {
      if (!have_header) fail(line, "demand before header");
      if (tok.size() != static_cast<std::size_t>(cert.K) + 2) fail(line, "demand needs K entries");
      if (to_int(tok[1], line) != static_cast<int>(cert.table.size()) + 1) fail(line, "demand ids must be consecutive");
      Demand d;
      for (std::size_t q = 2; q < tok.size(); ++q) d.d.push_back(to_int(tok[q], line));
      cert.table.push_back(std::move(d));
    } else if (tok[0] == "AX") {
      if (tok.size() < 4 || tok[tok.size() - 2] != "MUL") fail(line, "axiom must end with 'MUL <u>/<v>'");
      const std::vector<std::string> body(tok.begin() + 1, tok.end() - 2);
      cert.axioms.push_back({parse_axiom(body, line), parse_rational(tok.back())});
    } else if (tok[0] == "TARGET") {
      if (tok.size() != 8 || tok[2] != "M" || tok[3] != "+" || tok[5] != "R" || tok[6] != ">=") {
        fail(line, "target is 'TARGET <cM> M + <cR> R >= <c>'");
      }
      cert.target = {parse_rational(tok[1]), parse_rational(tok[4]), parse_rational(tok[7])};
      have_target = true;
    } else {
      fail(line, "unknown record '" + tok[0] + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing NK header");
  if (!have_target) throw Error(ErrorCode::ParseError, "missing TARGET line");
  return cert;
}

}  // namespace cachewright::converse

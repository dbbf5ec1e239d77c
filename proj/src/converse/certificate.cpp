#include "cachewright/converse/certificate.hpp"

#include <algorithm>
#include <bit>

namespace cachewright::converse {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::uint64_t low_bits(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

bool in_universe(const VarSet& s, const Certificate& c) {
  return (s.files & ~low_bits(c.N)) == 0 && (s.caches & ~low_bits(c.K)) == 0 &&
         (s.bcasts & ~low_bits(static_cast<int>(c.table.size()))) == 0;
}

std::optional<int> demand_id(const Demand& d, const Certificate& c) {
  for (std::size_t t = 0; t < c.table.size(); ++t) {
    if (c.table[t] == d) return static_cast<int>(t + 1);
  }
  return std::nullopt;
}

bool is_permutation(const std::vector<int>& perm, int K) {
  if (perm.size() != static_cast<std::size_t>(K)) return false;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int u = 1; u <= K; ++u) {
    if (sorted[static_cast<std::size_t>(u - 1)] != u) return false;
  }
  return true;
}

// pi S, or nullopt when some relabelled broadcast leaves the table.
std::optional<VarSet> permute_set(const VarSet& s, const std::vector<int>& perm, const Certificate& c) {
  VarSet out;
  out.files = s.files;
  for (const auto& v : s.members()) {
    if (v.kind == RandomVar::Kind::Cache) {
      out.add({RandomVar::Kind::Cache, perm[static_cast<std::size_t>(v.index - 1)]});
    } else if (v.kind == RandomVar::Kind::Bcast) {
      const auto id = demand_id(permute_demand(c.table[static_cast<std::size_t>(v.index - 1)], perm), c);
      if (!id) return std::nullopt;
      out.add({RandomVar::Kind::Bcast, *id});
    }
  }
  return out;
}

Violation malformed(std::string what) { return {FailureKind::MalformedAxiom, std::move(what)}; }

}  // namespace

std::string kind_name(const Axiom& ax) {
  return std::visit(overloaded{
                        [](const Submodularity&) { return "Submod"; },
                        [](const Monotonicity&) { return "Mono"; },
                        [](const Decodability&) { return "Decod"; },
                        [](const Totality&) { return "Total"; },
                        [](const CacheBound&) { return "CacheBound"; },
                        [](const RateBound&) { return "RateBound"; },
                        [](const FileIndependence&) { return "FileIndep"; },
                        [](const PermSymmetry&) { return "PermSym"; },
                        [](const FileSymmetry&) { return "FileSym"; },
                    },
                    ax);
}

bool is_equality(const Axiom& ax) {
  return !(std::holds_alternative<Submodularity>(ax) || std::holds_alternative<Monotonicity>(ax) ||
           std::holds_alternative<CacheBound>(ax) || std::holds_alternative<RateBound>(ax));
}

Demand permute_demand(const Demand& d, const std::vector<int>& perm) {
  Demand out{std::vector<int>(d.d.size())};
  for (std::size_t u = 0; u < perm.size(); ++u) {
    out.d[static_cast<std::size_t>(perm[u] - 1)] = d.d[u];
  }
  return out;
}

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::None: return "None";
    case FailureKind::MalformedAxiom: return "MalformedAxiom";
    case FailureKind::SymmetryOutsideTable: return "SymmetryOutsideTable";
    case FailureKind::NegativeMultiplierOnInequality: return "NegativeMultiplierOnInequality";
    case FailureKind::NonCancelling: return "NonCancelling";
    case FailureKind::TargetNotImplied: return "TargetNotImplied";
  }
  return "Unknown";
}

std::optional<Violation> validate(const Axiom& ax, const Certificate& c) {
  const int T = static_cast<int>(c.table.size());
  auto user_ok = [&](int l) { return l >= 1 && l <= c.K; };
  auto demand_ok = [&](int d) { return d >= 1 && d <= T; };
  auto file_ok = [&](int n) { return n >= 1 && n <= c.N; };

  return std::visit(
      overloaded{
          [&](const Submodularity& a) -> std::optional<Violation> {
            if (a.A.empty() || a.B.empty()) return malformed("empty operand");
            if (!in_universe(a.A, c) || !in_universe(a.B, c)) return malformed("variable outside universe");
            return std::nullopt;
          },
          [&](const Monotonicity& a) -> std::optional<Violation> {
            if (!a.sub.subset_of(a.sup)) return malformed("sub is not contained in sup");
            if (!in_universe(a.sup, c)) return malformed("variable outside universe");
            return std::nullopt;
          },
          [&](const Decodability& a) -> std::optional<Violation> {
            if (!user_ok(a.user) || !demand_ok(a.demand)) return malformed("user or demand out of range");
            if (!in_universe(a.S, c)) return malformed("variable outside universe");
            if (!a.S.has_cache(a.user)) return malformed("cache of the decoding user missing");
            if (!a.S.has_bcast(a.demand)) return malformed("broadcast missing");
            return std::nullopt;
          },
          [&](const Totality& a) -> std::optional<Violation> {
            if (!in_universe(a.S, c)) return malformed("variable outside universe");
            if (a.S.files != low_bits(c.N)) return malformed("not every file present");
            return std::nullopt;
          },
          [&](const CacheBound& a) -> std::optional<Violation> {
            if (!user_ok(a.user)) return malformed("user out of range");
            return std::nullopt;
          },
          [&](const RateBound& a) -> std::optional<Violation> {
            if (!demand_ok(a.demand)) return malformed("demand outside table");
            return std::nullopt;
          },
          [&](const FileIndependence& a) -> std::optional<Violation> {
            if (a.S.files == 0 || a.S.caches != 0 || a.S.bcasts != 0) return malformed("needs a nonempty set of files only");
            if (!in_universe(a.S, c)) return malformed("file out of range");
            return std::nullopt;
          },
          [&](const PermSymmetry& a) -> std::optional<Violation> {
            if (!is_permutation(a.perm, c.K)) return malformed("not a permutation of the users");
            if (a.S.empty() || !in_universe(a.S, c)) return malformed("bad variable set");
            if (!permute_set(a.S, a.perm, c)) {
              return Violation{FailureKind::SymmetryOutsideTable, "relabelled demand not in table"};
            }
            return std::nullopt;
          },
          [&](const FileSymmetry& a) -> std::optional<Violation> {
            if (!file_ok(a.n) || !file_ok(a.p) || !user_ok(a.user)) return malformed("index out of range");
            return std::nullopt;
          },
      },
      ax);
}

LinComb render(const Axiom& ax, const Certificate& c) {
  LinComb e;
  std::visit(overloaded{
                 [&](const Submodularity& a) {
                   e.add_entropy(a.A, 1).add_entropy(a.B, 1).add_entropy(a.A | a.B, -1).add_entropy(a.A & a.B, -1);
                 },
                 [&](const Monotonicity& a) { e.add_entropy(a.sup, 1).add_entropy(a.sub, -1); },
                 [&](const Decodability& a) {
                   const int want = c.table[static_cast<std::size_t>(a.demand - 1)].of(a.user);
                   e.add_entropy(a.S.with_file(want), 1).add_entropy(a.S, -1);
                 },
                 [&](const Totality& a) {
                   e.add_entropy(a.S, 1);
                   e.c0 = -c.N;
                 },
                 [&](const CacheBound& a) {
                   e.cM = 1;
                   e.add_entropy(VarSet{}.with_cache(a.user), -1);
                 },
                 [&](const RateBound& a) {
                   e.cR = 1;
                   e.add_entropy(VarSet{}.with_bcast(a.demand), -1);
                 },
                 [&](const FileIndependence& a) {
                   e.add_entropy(a.S, 1);
                   e.c0 = -std::popcount(a.S.files);
                 },
                 [&](const PermSymmetry& a) { e.add_entropy(a.S, 1).add_entropy(*permute_set(a.S, a.perm, c), -1); },
                 [&](const FileSymmetry& a) {
                   e.add_entropy(VarSet{}.with_file(a.n).with_cache(a.user), 1);
                   e.add_entropy(VarSet{}.with_file(a.p).with_cache(a.user), -1);
                 },
             },
             ax);
  return e;
}

CheckReport check_certificate(const Certificate& cert) {
  CheckReport report;
  for (std::size_t i = 0; i < cert.axioms.size(); ++i) {
    const auto& [ax, mul] = cert.axioms[i];
    if (auto v = validate(ax, cert)) {
      report.kind = v->kind;
      report.axiom_index = i;
      report.detail = kind_name(ax) + ": " + v->detail;
      return report;
    }
    if (!is_equality(ax) && mul < 0) {
      report.kind = FailureKind::NegativeMultiplierOnInequality;
      report.axiom_index = i;
      report.detail = kind_name(ax) + " carries multiplier " + to_short_string(mul);
      return report;
    }
    report.residual.add_scaled(render(ax, cert), mul);
  }

  if (!report.residual.entropy_free()) {
    report.kind = FailureKind::NonCancelling;
    const auto& [s, q] = *report.residual.terms.begin();
    report.detail = std::to_string(report.residual.terms.size()) + " entropy terms left, first H" + to_string(s) +
                    " with coefficient " + to_short_string(q);
    return report;
  }

  // The sum is a valid inequality sM*M + sR*R + s0 >= 0. It implies the target
  // when target - sum has nonnegative M and R coefficients and constant.
  const auto& r = report.residual;
  const Target& t = cert.target;
  if (t.cM - r.cM < 0 || t.cR - r.cR < 0 || -t.c - r.c0 < 0) {
    report.kind = FailureKind::TargetNotImplied;
    report.detail = "derived " + to_string(r) + " >= 0 does not imply " + target_string(t);
    return report;
  }
  report.pass = true;
  return report;
}

std::string target_string(const Target& t) {
  auto coeff = [](const Rational& q, const char* var) {
    if (q == Rational(1)) return std::string(var);
    if (q.denominator() == 1) return to_short_string(q) + var;
    return "(" + to_short_string(q) + ")" + var;
  };
  return coeff(t.cM, "M") + "+" + coeff(t.cR, "R") + " >= " + to_short_string(t.c);
}

}  // namespace cachewright::converse

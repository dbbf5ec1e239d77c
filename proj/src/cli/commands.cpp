#include "cachewright/cli.hpp"

#include "cachewright/converse/generators.hpp"
#include "cachewright/converse/serialize.hpp"
#include "cachewright/error.hpp"
#include "cachewright/tradeoff.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace cachewright::cli {

namespace {

struct Common {
  int n = 0;
  int k = 0;
  std::string prime = "auto";
  bool force = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "number of files")->required();
  cmd->add_option("--k", c.k, "number of users")->required();
  cmd->add_option("--prime", c.prime, "field modulus, or auto");
  cmd->add_flag("--force", c.force, "lift combinatorial size guards");
}

NetworkConfig config_of(const Common& c) {
  std::optional<std::uint32_t> p;
  if (c.prime != "auto") {
    try {
      p = static_cast<std::uint32_t>(std::stoul(c.prime));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "--prime expects an integer or auto");
    }
  }
  return make_config(c.n, c.k, p);
}

void guard(const Common& c, int limit, const char* what) {
  if (c.k > limit && !c.force) {
    throw Error(ErrorCode::OutOfRange, std::string(what) + " is limited to K <= " + std::to_string(limit) +
                                           " (use --force to override)");
  }
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigMismatch, "cannot read " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ConfigMismatch, "cannot write " + path);
  out << data;
}

int cmd_roundtrip(const Common& c, const std::string& in_path, const std::string& out_path,
                  const std::string& scheme_text, const std::string& demand_text, int user, std::ostream& out) {
  const NetworkConfig cfg = config_of(c);
  const Scheme scheme = parse_scheme(scheme_text);
  const Demand demand = parse_demand(demand_text);
  validate_demand(demand, cfg);
  if (scheme == Scheme::New && !is_surjective(demand, cfg.N)) {
    throw Error(ErrorCode::DemandNotInD, "demand " + demand_text + " leaves a file unrequested");
  }
  const Bytes input = read_file(in_path);
  const RoundtripResult r = roundtrip(cfg, scheme, demand, user, input);
  if (!out_path.empty()) write_file(out_path, std::string(r.decoded.begin(), r.decoded.end()));

  const bool match = r.decoded == input && r.all_users_ok;
  out << "scheme=" << scheme_name(scheme) << " N=" << cfg.N << " K=" << cfg.K << " p=" << cfg.p << " user=" << user
      << " file=" << demand.of(user) << '\n';
  out << "M=" << to_short_string(r.M) << " R=" << to_short_string(r.R) << '\n';
  out << "bytes=" << input.size() << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
  return match ? 0 : 1;
}

int cmd_verify(const Common& c, const std::string& scheme_text, unsigned jobs, std::ostream& out) {
  guard(c, 8, "exhaustive verification");
  const NetworkConfig cfg = config_of(c);
  const VerifyReport report = run_verify(cfg, parse_scheme(scheme_text), jobs);
  out << to_json(report) << '\n';
  return report.pass() ? 0 : 1;
}

int cmd_tradeoff(const Common& c, int samples, const std::string& out_path, bool segments, std::ostream& out) {
  if (c.n < 1 || c.k < 2 || c.n > c.k) throw Error(ErrorCode::ConfigMismatch, "need 1 <= N <= K and K >= 2");
  const TradeoffCurve curve = assemble_known_curve(c.n, c.k);
  std::string text;
  if (segments) {
    std::ostringstream s;
    s << "M_lo,M_hi,intercept,slope,provenance\n";
    for (const auto& seg : curve.segments) {
      s << to_fraction_string(seg.M_lo) << ',' << to_fraction_string(seg.M_hi) << ','
        << to_fraction_string(seg.intercept) << ',' << to_fraction_string(seg.slope) << ',' << seg.provenance << '\n';
    }
    text = s.str();
  } else {
    text = emit_csv(curve, samples);
  }
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

int cmd_converse(const Common& c, const std::string& theorem_text, const std::string& out_path, std::ostream& out) {
  guard(c, 10, "certificate generation");
  int theorem = 0;
  if (theorem_text == "2" || theorem_text == "4") {
    theorem = std::stoi(theorem_text);
  } else if (theorem_text == "auto") {
    theorem = case1_valid(c.n, c.k) ? 2 : 4;
  } else {
    throw Error(ErrorCode::ParseError, "--theorem expects 2, 4 or auto");
  }
  const converse::Certificate cert =
      theorem == 2 ? converse::gen_certificate_theorem2(c.n, c.k) : converse::gen_certificate_theorem4(c.n, c.k);
  const converse::CheckReport report = converse::check_certificate(cert);
  const converse::TightnessReport tight = converse::tightness_check(c.n, c.k, theorem);
  if (!out_path.empty()) write_file(out_path, converse::serialize(cert));

  out << converse::target_string(cert.target) << ' ' << (report.pass ? "PASS" : "FAIL") << "; "
      << (tight.tight ? "tight" : "not tight") << " at M=" << to_short_string(tight.M) << '\n';
  out << "theorem=" << theorem << " N=" << c.n << " K=" << c.k << " axioms=" << cert.axioms.size()
      << " demands=" << cert.table.size() << '\n';
  out << "corner: bound R=" << to_short_string(tight.bound_R) << ", " << tight.achiever
      << " R=" << to_short_string(tight.achievable_R) << '\n';
  if (!report.pass) {
    out << "failure: " << converse::to_string(report.kind);
    if (report.axiom_index) out << " at axiom " << *report.axiom_index;
    out << ": " << report.detail << '\n';
  }
  return report.pass && tight.tight ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coded caching schemes, tradeoff curves and converse certificates"};
  app.require_subcommand(1);

  Common c;
  std::string scheme = "new", demand, in_path, out_path, theorem = "auto";
  int user = 1, samples = 11;
  unsigned jobs = default_jobs();
  bool segments = false;

  auto* rt = app.add_subcommand("roundtrip", "push one file through placement, delivery and decoding");
  add_common(rt, c);
  rt->add_option("--in", in_path, "input file")->required();
  rt->add_option("--out", out_path, "where to write the decoded bytes");
  rt->add_option("--scheme", scheme, "new or man");
  rt->add_option("--demand", demand, "K comma-separated file indices")->required();
  rt->add_option("--user", user, "user whose decoded file is written");

  auto* vf = app.add_subcommand("verify", "decode every demand in D for every user");
  add_common(vf, c);
  vf->add_option("--scheme", scheme, "new or man");
  vf->add_option("--jobs", jobs, "worker threads");

  auto* tr = app.add_subcommand("tradeoff", "emit the known rate-memory curve as CSV");
  add_common(tr, c);
  tr->add_option("--samples", samples, "uniform samples besides the corners (0 or >= 2)");
  tr->add_option("--out", out_path, "CSV path, stdout if omitted");
  tr->add_flag("--segments", segments, "print segments instead of points");

  auto* cv = app.add_subcommand("converse", "generate and check a lower-bound certificate");
  add_common(cv, c);
  cv->add_option("--theorem", theorem, "2, 4 or auto");
  cv->add_option("--out", out_path, "dump the certificate in text form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rt->parsed()) return cmd_roundtrip(c, in_path, out_path, scheme, demand, user, out);
    if (vf->parsed()) return cmd_verify(c, scheme, jobs, out);
    if (tr->parsed()) return cmd_tradeoff(c, samples, out_path, segments, out);
    return cmd_converse(c, theorem, out_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cachewright::cli

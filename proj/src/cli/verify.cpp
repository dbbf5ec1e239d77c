#include "cachewright/cli.hpp"

#include "cachewright/error.hpp"
#include "cachewright/scheme_baselines.hpp"
#include "cachewright/scheme_new.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <thread>

namespace cachewright::cli {

Scheme parse_scheme(const std::string& name) {
  if (name == "new") return Scheme::New;
  if (name == "man") return Scheme::Man;
  throw Error(ErrorCode::ConfigMismatch, "unknown scheme '" + name + "' (expected new or man)");
}

std::string scheme_name(Scheme s) { return s == Scheme::New ? "new" : "man"; }

Bytes filler_bytes(std::uint64_t tag, std::size_t length) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ tag);
  Bytes out(length);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng() & 0xFF);
  return out;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("CACHEWRIGHT_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Demand parse_demand(const std::string& text) {
  Demand d;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string tok = text.substr(pos, end - pos);
    try {
      std::size_t used = 0;
      d.d.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad demand entry '" + tok + "'");
    }
    pos = end + 1;
  }
  return d;
}

namespace {

// Scheme-agnostic view over one placed library.
class Harness {
 public:
  Harness(const NetworkConfig& cfg, Scheme scheme, std::vector<Bytes> files)
      : cfg_(cfg), scheme_(scheme), field_(make_field(cfg.p)), files_(std::move(files)) {
    for (const auto& f : files_) {
      library_.push_back(scheme == Scheme::New ? split_file(field_, f, cfg) : man_split(field_, f, cfg));
    }
    if (scheme == Scheme::New) {
      caches_ = place(field_, library_, cfg);
    } else {
      man_caches_ = man_place(library_, cfg);
    }
  }

  Rational memory() const {
    return scheme_ == Scheme::New ? measured_memory(caches_.front()) : man_measured_memory(man_caches_.front());
  }

  // Decodes every user; returns the rate and fills `decoded`.
  Rational run(const Demand& demand, std::vector<Bytes>& decoded) const {
    decoded.clear();
    if (scheme_ == Scheme::New) {
      const Broadcast b = deliver(field_, library_, demand, cfg_);
      for (const auto& c : caches_) decoded.push_back(decode(field_, c, b, cfg_));
      return measured_rate(b, caches_.front());
    }
    const ManPacket packet = man_deliver(field_, library_, demand, cfg_);
    for (const auto& c : man_caches_) decoded.push_back(man_decode(field_, c, packet));
    return man_measured_rate(packet, man_caches_.front());
  }

  const Bytes& file(int n) const { return files_.at(static_cast<std::size_t>(n - 1)); }

 private:
  NetworkConfig cfg_;
  Scheme scheme_;
  FieldCtx field_;
  std::vector<Bytes> files_;
  Library library_;
  std::vector<CacheContents> caches_;
  std::vector<ManCache> man_caches_;
};

std::string demand_string(const Demand& d) {
  std::string s;
  for (int n : d.d) s += (s.empty() ? "" : ",") + std::to_string(n);
  return s;
}

}  // namespace

VerifyReport run_verify(const NetworkConfig& cfg, Scheme scheme, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.N = cfg.N;
  report.K = cfg.K;
  report.p = cfg.p;
  report.scheme = scheme;

  // Two symbols per piece for the new scheme; the MAN split reuses the bytes.
  const std::size_t length = static_cast<std::size_t>(pair_count(cfg.K)) * 2;
  std::vector<Bytes> files;
  for (int n = 1; n <= cfg.N; ++n) files.push_back(filler_bytes(static_cast<std::uint64_t>(n), length));
  const Harness harness(cfg, scheme, std::move(files));
  report.M = harness.memory();
  const Rational expected_R = scheme == Scheme::New ? Rational(1, cfg.K - 1) : Rational(1, cfg.K);

  const std::vector<Demand> demands = enumerate_demands(cfg);
  std::vector<std::vector<Failure>> per_demand(demands.size());
  std::vector<Rational> rates(demands.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    std::vector<Bytes> decoded;
    for (std::size_t i = next++; i < demands.size(); i = next++) {
      const Demand& d = demands[i];
      auto& out = per_demand[i];
      try {
        const Rational r = harness.run(d, decoded);
        rates[i] = r;
        if (r != expected_R) out.push_back({d, 0, "rate " + to_short_string(r) + " != " + to_short_string(expected_R)});
        for (int u = 1; u <= cfg.K; ++u) {
          if (decoded[static_cast<std::size_t>(u - 1)] != harness.file(d.of(u))) {
            out.push_back({d, u, "decoded bytes differ from file " + std::to_string(d.of(u))});
          }
        }
      } catch (const std::exception& e) {
        out.push_back({d, 0, e.what()});
      }
    }
  };

  const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(demands.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& f : per_demand) {
    for (auto& x : f) report.failures.push_back(std::move(x));
  }
  report.demands_checked = demands.size();
  report.decodes_checked = demands.size() * static_cast<std::size_t>(cfg.K);
  // Any demand whose rate deviates is already listed as a failure.
  report.R = rates.empty() ? Rational(0) : *std::max_element(rates.begin(), rates.end());
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["config"] = {{"N", report.N}, {"K", report.K}, {"p", report.p}, {"scheme", scheme_name(report.scheme)}};
  j["demands_checked"] = report.demands_checked;
  j["decodes_checked"] = report.decodes_checked;
  j["measured_M"] = to_short_string(report.M);
  j["measured_R"] = to_short_string(report.R);
  j["result"] = report.pass() ? "PASS" : "FAIL";
  j["wall_time_ms"] = report.wall_time_ms;
  auto failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"demand", demand_string(f.demand)}, {"user", f.user}, {"reason", f.reason}});
  }
  j["failures"] = failures;
  return j.dump(2);
}

RoundtripResult roundtrip(const NetworkConfig& cfg, Scheme scheme, const Demand& demand, int user,
                          std::span<const std::uint8_t> input) {
  validate_demand(demand, cfg);
  if (user < 1 || user > cfg.K) throw Error(ErrorCode::ConfigMismatch, "user " + std::to_string(user) + " out of range");
  const int slot = demand.of(user);
  std::vector<Bytes> files;
  for (int n = 1; n <= cfg.N; ++n) {
    files.push_back(n == slot ? Bytes(input.begin(), input.end())
                              : filler_bytes(0x1000u + static_cast<std::uint64_t>(n), input.size()));
  }
  const Harness harness(cfg, scheme, std::move(files));
  RoundtripResult result;
  std::vector<Bytes> decoded;
  result.R = harness.run(demand, decoded);
  result.M = harness.memory();
  result.all_users_ok = true;
  for (int u = 1; u <= cfg.K; ++u) {
    if (decoded[static_cast<std::size_t>(u - 1)] != harness.file(demand.of(u))) result.all_users_ok = false;
  }
  result.decoded = std::move(decoded[static_cast<std::size_t>(user - 1)]);
  return result;
}

}  // namespace cachewright::cli

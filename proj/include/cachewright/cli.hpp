#pragma once

#include "cachewright/field.hpp"
#include "cachewright/model.hpp"
#include "cachewright/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cachewright::cli {

enum class Scheme { New, Man };

Scheme parse_scheme(const std::string& name);
std::string scheme_name(Scheme s);

/// Deterministic pseudorandom bytes; the same (tag, length) always gives the same content.
Bytes filler_bytes(std::uint64_t tag, std::size_t length);

struct Failure {
  Demand demand;
  int user = 0;
  std::string reason;
};

struct VerifyReport {
  int N = 0, K = 0;
  std::uint32_t p = 0;
  Scheme scheme = Scheme::New;
  std::size_t demands_checked = 0;
  std::size_t decodes_checked = 0;
  std::vector<Failure> failures;
  Rational M, R;  // measured from symbol counts
  double wall_time_ms = 0;

  bool pass() const { return failures.empty(); }
};

/// Every demand in D, every user, against a deterministic library.
/// Workers split the demand list; results are merged in demand order.
VerifyReport run_verify(const NetworkConfig& cfg, Scheme scheme, unsigned jobs);

std::string to_json(const VerifyReport& report);

struct RoundtripResult {
  Bytes decoded;         // what `user` recovered
  bool all_users_ok = false;
  Rational M, R;
};

/// `input` occupies the slot of the file `user` requests; the other slots hold
/// fillers of the same length. Every user decodes; `decoded` is `user`'s output.
RoundtripResult roundtrip(const NetworkConfig& cfg, Scheme scheme, const Demand& demand, int user,
                          std::span<const std::uint8_t> input);

/// Parallelism from CACHEWRIGHT_JOBS, else the hardware thread count.
unsigned default_jobs();

/// Parses "1,1,2,3".
Demand parse_demand(const std::string& text);

/// Entry point shared by the binary and the tests. Exit codes: 0 pass,
/// 1 verification failure, 2 usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cachewright::cli

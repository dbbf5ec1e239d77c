#include "cachewright/error.hpp"
#include "cachewright/field.hpp"
#include "cachewright/model.hpp"
#include "cachewright/scheme_baselines.hpp"

#include <doctest.h>

#include <random>

using namespace cachewright;

namespace {

Rational choose(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return Rational(r);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("Yu points") {
  CHECK(yu_memory(3, 4, 1) == Rational(3, 4));
  CHECK(rate_yu(3, 4, 1) == Rational(3, 2));
  CHECK(yu_memory(2, 4, 2) == Rational(1));
  CHECK(rate_yu(2, 4, 2) == Rational(2, 3));
  CHECK(rate_yu(3, 4, 4) == Rational(0));
  CHECK(rate_yu(3, 4, 0) == Rational(3));
  CHECK(rate_yu(4, 4, 3) == Rational(1, 4));
  for (int K = 2; K <= 10; ++K) {
    for (int N = 1; N <= K; ++N) {
      for (int r = 0; r <= K; ++r) {
        CHECK(yu_memory(N, K, r) == Rational(N * r, K));
        const Rational expect = (choose(K, r + 1) - choose(K - N, r + 1)) / choose(K, r);
        CHECK(rate_yu(N, K, r) == expect);
      }
    }
  }
  CHECK(code_of([] { rate_yu(3, 4, 5); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { rate_yu(3, 4, -1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("Chen and Gomez lines") {
  CHECK(rate_chen(3, 4, Rational(0)) == Rational(3));
  CHECK(rate_chen(3, 4, Rational(1, 4)) == Rational(9, 4));
  CHECK(rate_chen(2, 4, Rational(1, 4)) == Rational(3, 2));
  CHECK(code_of([] { rate_chen(3, 4, Rational(1, 2)); }) == ErrorCode::OutOfRange);

  CHECK(rate_gomez(3, Rational(1, 3)) == Rational(2));
  CHECK(rate_gomez(3, Rational(1, 2)) == Rational(5, 3));
  CHECK(code_of([] { rate_gomez(3, Rational(1)); }) == ErrorCode::OutOfRange);

  CHECK(rate_man_line(3, 4, Rational(9, 4)) == Rational(1, 4));
  CHECK(rate_man_line(3, 4, Rational(3)) == Rational(0));
  CHECK(code_of([] { rate_man_line(3, 4, Rational(2)); }) == ErrorCode::OutOfRange);
}

TEST_CASE("MAN split rejects a single user") {
  const auto f = make_field(257);
  CHECK(code_of([&] { man_split(f, Bytes{1, 2}, make_config(1, 1)); }) == ErrorCode::DegenerateInput);
}

TEST_CASE("MAN scheme decodes every demand including non-surjective ones") {
  for (int K = 2; K <= 6; ++K) {
    for (int N = 1; N <= K; ++N) {
      const auto cfg = make_config(N, K);
      const auto f = make_field(cfg.p);
      std::mt19937 rng(static_cast<unsigned>(K * 7 + N));
      std::vector<Bytes> raw;
      Library lib;
      for (int n = 0; n < N; ++n) {
        Bytes b(static_cast<std::size_t>(K) * 3 + 1);
        for (auto& x : b) x = static_cast<std::uint8_t>(rng());
        raw.push_back(b);
        lib.push_back(man_split(f, b, cfg));
      }
      const auto caches = man_place(lib, cfg);
      for (const auto& c : caches) CHECK(man_measured_memory(c) == Rational(N * (K - 1), K));

      // Odometer over all N^K demands.
      std::vector<int> d(static_cast<std::size_t>(K), 1);
      int failures = 0;
      while (true) {
        const Demand dem{d};
        const auto pkt = man_deliver(f, lib, dem, cfg);
        CHECK(man_measured_rate(pkt, caches[0]) == Rational(1, K));
        for (int k = 1; k <= K; ++k) {
          if (man_decode(f, caches[static_cast<std::size_t>(k - 1)], pkt) != raw[static_cast<std::size_t>(dem.of(k) - 1)]) {
            ++failures;
          }
        }
        int pos = K - 1;
        while (pos >= 0 && d[static_cast<std::size_t>(pos)] == N) d[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++d[static_cast<std::size_t>(pos)];
      }
      CHECK_MESSAGE(failures == 0, "N=" << N << " K=" << K);
    }
  }
}

TEST_CASE("MAN cache holds every part except its own") {
  const auto cfg = make_config(2, 3);
  const auto f = make_field(cfg.p);
  Library lib{man_split(f, Bytes{1, 2, 3}, cfg), man_split(f, Bytes{4, 5, 6}, cfg)};
  const auto caches = man_place(lib, cfg);
  CHECK(caches[1].parts.size() == 4);
  CHECK(caches[1].part(2, 1) == SymbolVec{Symbol{4}});
  CHECK(caches[1].part(1, 3) == SymbolVec{Symbol{3}});
  CHECK_THROWS_AS(caches[1].part(1, 2), Error);
}

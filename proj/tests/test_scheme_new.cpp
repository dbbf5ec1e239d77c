#include "cachewright/error.hpp"
#include "cachewright/field.hpp"
#include "cachewright/model.hpp"
#include "cachewright/scheme_new.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace cachewright;

namespace {

Library random_library(const FieldCtx& f, const NetworkConfig& cfg, std::size_t bytes, unsigned seed) {
  std::mt19937 rng(seed);
  Library lib;
  for (int n = 0; n < cfg.N; ++n) {
    Bytes b(bytes);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    lib.push_back(split_file(f, b, cfg));
  }
  return lib;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// X^k computed straight from the library with plain integer arithmetic.
std::vector<std::uint64_t> oracle_packet(const Library& lib, const Demand& d, int k, std::uint64_t p) {
  const int K = static_cast<int>(d.d.size());
  const std::size_t L = lib[0].L;
  std::vector<std::uint64_t> out(L, 0);
  for (int s = 1; s <= K; ++s) {
    if (s == k) continue;
    int same = 0;
    for (int u = 1; u <= K; ++u) {
      if (u != k && d.of(u) == d.of(s)) ++same;
    }
    const std::uint64_t sign = d.of(s) == d.of(k) ? p - 1 : 1;
    const std::uint64_t c = sign * powmod(static_cast<std::uint64_t>(same), p - 2, p) % p;
    const auto& piece = lib[static_cast<std::size_t>(d.of(s) - 1)].at(k, s);
    for (std::size_t t = 0; t < L; ++t) out[t] = (out[t] + c * piece[t].value) % p;
  }
  return out;
}

}  // namespace

TEST_CASE("placement at N=3 K=4 stores 18 stage-1 pieces and 7 stage-2 packets") {
  const auto cfg = make_config(3, 4);
  const auto f = make_field(cfg.p);
  const auto lib = random_library(f, cfg, 24, 1);
  const auto caches = place(f, lib, cfg);
  REQUIRE(caches.size() == 4);
  for (const auto& c : caches) {
    CHECK(c.stage1.size() == 18);
    CHECK(c.stage2_diffs.size() + 1 == 7);
    CHECK(c.packet_count() == 25);
    CHECK(measured_memory(c) == Rational(25, 12));
    for (const auto& pkt : c.stage1) CHECK(pkt.i != c.user);
    for (const auto& pkt : c.stage1) CHECK(pkt.j != c.user);
  }
}

TEST_CASE("cache size matches (NK(K-2)+1)/(K(K-1)) for every grid point") {
  for (int K = 2; K <= 7; ++K) {
    for (int N = 1; N <= K; ++N) {
      const auto cfg = make_config(N, K);
      const auto f = make_field(cfg.p);
      const auto lib = random_library(f, cfg, 10, 2);
      const auto caches = place(f, lib, cfg);
      const Rational expect(N * K * (K - 2) + 1, K * (K - 1));
      for (const auto& c : caches) CHECK(measured_memory(c) == expect);
      const auto [M, R] = scheme_point(N, K);
      CHECK(M == expect);
      CHECK(R == Rational(1, K - 1));
    }
  }
  CHECK(scheme_point(4, 4) == std::pair{Rational(11, 4), Rational(1, 3)});
  CHECK(scheme_point(3, 4).first == Rational(25, 12));
  CHECK_THROWS_AS(scheme_point(2, 1), Error);
}

TEST_CASE("delivery coefficients at demand (1,1,2,3)") {
  const auto cfg = make_config(3, 4);
  const auto f = make_field(cfg.p);
  const auto lib = random_library(f, cfg, 24, 3);
  const Demand d{{1, 1, 2, 3}};
  const auto bc = deliver(f, lib, d, cfg);
  REQUIRE(bc.terms.size() == 4);

  // X^1 = -W_1^{12} + W_2^{13} + W_3^{14}
  const auto& t1 = bc.terms[0];
  REQUIRE(t1.size() == 3);
  CHECK(t1[0].file == 1);
  CHECK(t1[0].i == 1);
  CHECK(t1[0].j == 2);
  CHECK(t1[0].coeff == Rational(-1));
  CHECK(t1[1].file == 2);
  CHECK(t1[1].coeff == Rational(1));
  CHECK(t1[2].file == 3);
  CHECK(t1[2].coeff == Rational(1));

  // X^3 = 1/2 W_1^{31} + 1/2 W_1^{32} + W_3^{34}
  const auto& t3 = bc.terms[2];
  REQUIRE(t3.size() == 3);
  CHECK(t3[0].coeff == Rational(1, 2));
  CHECK(t3[1].coeff == Rational(1, 2));
  CHECK(t3[2].file == 3);
  CHECK(t3[2].coeff == Rational(1));

  const DemandContext ctx(d, cfg);
  CHECK(delivery_coeff(ctx, 3, 1) == Rational(1, 2));
  CHECK(delivery_coeff(ctx, 1, 2) == Rational(-1));

  for (int k = 1; k <= 4; ++k) {
    const auto expect = oracle_packet(lib, d, k, cfg.p);
    const auto& got = bc.packets[static_cast<std::size_t>(k - 1)];
    REQUIRE(got.size() == expect.size());
    for (std::size_t t = 0; t < expect.size(); ++t) CHECK(got[t].value == expect[t]);
  }
  CHECK(bc.symbol_count() == 4 * lib[0].L);
}

TEST_CASE("packets match the direct oracle for all demands at small sizes") {
  for (int K = 2; K <= 5; ++K) {
    for (int N = 1; N <= K; ++N) {
      const auto cfg = make_config(N, K);
      const auto f = make_field(cfg.p);
      const auto lib = random_library(f, cfg, static_cast<std::size_t>(pair_count(K) * 2), 4);
      for (const auto& d : enumerate_demands(cfg)) {
        const auto bc = deliver(f, lib, d, cfg);
        for (int k = 1; k <= K; ++k) {
          const auto expect = oracle_packet(lib, d, k, cfg.p);
          const auto& got = bc.packets[static_cast<std::size_t>(k - 1)];
          for (std::size_t t = 0; t < expect.size(); ++t) CHECK(got[t].value == expect[t]);
        }
      }
    }
  }
}

TEST_CASE("every user decodes its file for every demand, N <= K <= 7") {
  for (int K = 2; K <= 7; ++K) {
    for (int N = 1; N <= K; ++N) {
      const auto cfg = make_config(N, K);
      const auto f = make_field(cfg.p);
      std::vector<Bytes> raw;
      Library lib;
      std::mt19937 rng(static_cast<unsigned>(N * 31 + K));
      for (int n = 0; n < N; ++n) {
        Bytes b(static_cast<std::size_t>(pair_count(K)) + 3);
        for (auto& x : b) x = static_cast<std::uint8_t>(rng());
        raw.push_back(b);
        lib.push_back(split_file(f, b, cfg));
      }
      const auto caches = place(f, lib, cfg);
      int failures = 0;
      for (const auto& d : enumerate_demands(cfg)) {
        const auto bc = deliver(f, lib, d, cfg);
        CHECK(measured_rate(bc, caches[0]) == Rational(1, K - 1));
        for (int k = 1; k <= K; ++k) {
          if (decode(f, caches[static_cast<std::size_t>(k - 1)], bc, cfg) != raw[static_cast<std::size_t>(d.of(k) - 1)]) {
            ++failures;
          }
        }
      }
      CHECK_MESSAGE(failures == 0, "N=" << N << " K=" << K);
    }
  }
}

TEST_CASE("stage-1 pieces decode from one packet and the cache alone") {
  const auto cfg = make_config(3, 4);
  const auto f = make_field(cfg.p);
  const auto lib = random_library(f, cfg, 48, 5);
  const auto caches = place(f, lib, cfg);
  for (const auto& d : enumerate_demands(cfg)) {
    const auto bc = deliver(f, lib, d, cfg);
    const DemandContext ctx(d, cfg);
    for (int k = 1; k <= 4; ++k) {
      for (int j = 1; j <= 4; ++j) {
        if (j == k) continue;
        const auto piece = decode_stage1_piece(f, caches[static_cast<std::size_t>(k - 1)], ctx, j,
                                               bc.packets[static_cast<std::size_t>(j - 1)]);
        CHECK(piece == lib[static_cast<std::size_t>(d.of(k) - 1)].at(j, k));
      }
    }
  }
}

TEST_CASE("cache accessors") {
  const auto cfg = make_config(2, 3);
  const auto f = make_field(cfg.p);
  const auto lib = random_library(f, cfg, 12, 6);
  const auto caches = place(f, lib, cfg);
  const auto& c1 = caches[0];
  CHECK(c1.subfile(2, 2, 3) == lib[1].at(2, 3));
  // diff(file, succ) is zero by definition.
  for (const auto& s : c1.diff(1, 2)) CHECK(s.value == 0u);
  SymbolVec expect = lib[0].at(1, 2);
  f.sub_into(expect, lib[0].at(1, 3));
  CHECK(c1.diff(1, 3) == expect);
}

TEST_CASE("delivery rejects demands outside the surjective set") {
  const auto cfg = make_config(3, 4);
  const auto f = make_field(cfg.p);
  const auto lib = random_library(f, cfg, 24, 7);
  try {
    deliver(f, lib, Demand{{1, 1, 1, 1}}, cfg);
    FAIL("expected DemandNotInD");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DemandNotInD);
  }
  CHECK_THROWS_AS(deliver(f, lib, Demand{{1, 2, 3}}, cfg), Error);
}

TEST_CASE("decoding a truncated packet fails with LengthMismatch") {
  const auto cfg = make_config(2, 3);
  const auto f = make_field(cfg.p);
  const auto lib = random_library(f, cfg, 12, 8);
  const auto caches = place(f, lib, cfg);
  auto bc = deliver(f, lib, Demand{{1, 2, 1}}, cfg);
  bc.packets[1].pop_back();
  try {
    decode(f, caches[0], bc, cfg);
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
}

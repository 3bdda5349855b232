#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "qpd/rng.hpp"
#include "support.hpp"

using namespace qpd;

// Known answers generated with numpy.random.Philox (counter = 0,
// key = {seed, stream}), i.e. the reference Philox4x64-10 outputs.
TEST_CASE("philox known-answer vectors") {
  struct Kat {
    std::uint64_t seed, stream;
    std::uint64_t expect[8];
  };
  const Kat kats[] = {
      {0, 0,
       {0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL, 0x1c8667a55d902e79ULL,
        0x907d7a052fd5b4dcULL, 0x809bf322883987c3ULL, 0x471128b9e807f7ddULL,
        0xf250ba0dbec065b7ULL, 0xfc6ed66767a457bcULL}},
      {42, 0,
       {0xd1f8817d4d62880eULL, 0x307266b65cc8797eULL, 0xde1f04e7f084ed03ULL,
        0x65034a8e78cd1e59ULL, 0x5e3daa8961c3e3d3ULL, 0x6f37dea4a04bd05cULL,
        0x31d3a1ae26e190b9ULL, 0x0fef7fae0ab2a01aULL}},
      {42, 7,
       {0xa64064f34e84b9a3ULL, 0xe287959a866a08fdULL, 0x8dc181f009b96c03ULL,
        0xf3f6001d4fa83454ULL, 0x69c633ee791df6b3ULL, 0x89327f7a8f0127a4ULL,
        0x1ed8260458996ff6ULL, 0x4299f7433fb1683eULL}},
      {0xdeadbeefcafef00dULL, 0x0123456789abcdefULL,
       {0xb56b692a26a92307ULL, 0x659f9f0b7ccaec10ULL, 0x480e97cf461d3107ULL,
        0xfdbf111dc5e6fdb6ULL, 0xf69eaec1f6032b61ULL, 0x39bbfb3bb23e929cULL,
        0xbafc0adad2a25c59ULL, 0x6ca6303e1c782726ULL}},
  };
  for (const Kat& kat : kats) {
    Rng rng(kat.seed, kat.stream);
    for (std::uint64_t want : kat.expect) CHECK(rng.next_u64() == want);
  }
}

TEST_CASE("streams are reproducible and distinct") {
  Rng a(123, 0), b(123, 0), c(123, 1);
  bool same_ab = true, same_ac = true;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next_u64();
    same_ab = same_ab && (va == b.next_u64());
    same_ac = same_ac && (va == c.next_u64());
  }
  CHECK(same_ab);
  CHECK(!same_ac);
}

TEST_CASE("uniform values lie in [0,1)") {
  Rng rng(7, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("normal moments") {
  Rng rng(8, 0);
  const int n = 200000;
  std::vector<double> xs(n);
  for (double& x : xs) x = rng.normal();
  const auto ms = test::mean_stderr(xs);
  CHECK(std::abs(ms.mean) < 4 * ms.stderr_);

  double m2 = 0.0, m4 = 0.0;
  for (double x : xs) {
    m2 += x * x;
    m4 += x * x * x * x;
  }
  m2 /= n;
  m4 /= n;
  // Var(x^2) = 2 for a standard normal
  CHECK(std::abs(m2 - 1.0) < 4 * std::sqrt(2.0 / n));
  CHECK(std::abs(m4 - 3.0) < 0.1);
}

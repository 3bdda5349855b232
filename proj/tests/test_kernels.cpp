// Scalar/AVX2 kernel equivalence. The two variants may differ by FMA
// rounding only; everything here is checked against the scalar reference
// and against an independent quaternion-scalar loop.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qpd/kernels.hpp"
#include "qpd/qmatrix.hpp"
#include "support.hpp"

using namespace qpd;

namespace {

std::vector<Quaternion> random_row(int m, Rng& rng) {
  std::vector<Quaternion> v(m);
  for (Quaternion& q : v) q = test::random_quaternion(rng);
  return v;
}

double max_q_diff(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("scalar axpy_row matches the quaternion-scalar loop") {
  Rng rng(21, 0);
  const kernels::Table& scalar = kernels::scalar_table();
  for (int m : {1, 2, 3, 5, 8, 17}) {
    for (int t = 0; t < 20; ++t) {
      const Quaternion a = test::random_quaternion(rng);
      const std::vector<Quaternion> src = random_row(m, rng);
      std::vector<Quaternion> dst = random_row(m, rng);
      std::vector<Quaternion> want = dst;
      for (int i = 0; i < m; ++i) want[i] += a * src[i];
      scalar.axpy_row(dst.data(), a, src.data(), m);
      CHECK(max_q_diff(dst, want) <= 1e-14);
    }
  }
}

TEST_CASE("avx2 kernels agree with scalar") {
  const kernels::Table* avx2 = kernels::avx2_table();
  if (!avx2) {
    MESSAGE("AVX2 not available on this CPU; variant not exercised");
    return;
  }
  const kernels::Table& scalar = kernels::scalar_table();
  Rng rng(22, 0);

  SUBCASE("axpy_row") {
    for (int m : {0, 1, 2, 3, 4, 5, 7, 16, 33}) {
      for (int t = 0; t < 50; ++t) {
        const Quaternion a = test::random_quaternion(rng);
        const std::vector<Quaternion> src = random_row(std::max(m, 1), rng);
        std::vector<Quaternion> d0 = random_row(std::max(m, 1), rng);
        std::vector<Quaternion> d1 = d0;
        scalar.axpy_row(d0.data(), a, src.data(), m);
        avx2->axpy_row(d1.data(), a, src.data(), m);
        double scale = 0.0;
        for (const Quaternion& q : d0) scale = std::max(scale, abs(q));
        CHECK(max_q_diff(d0, d1) <= 1e-13 * std::max(1.0, scale));
      }
    }
  }

  SUBCASE("dot") {
    for (int len : {0, 1, 3, 4, 15, 16, 17, 64, 257}) {
      for (int t = 0; t < 20; ++t) {
        std::vector<double> x(std::max(len, 1)), y(std::max(len, 1));
        double scale = 0.0;
        for (int i = 0; i < len; ++i) {
          x[i] = rng.normal();
          y[i] = rng.normal();
          scale += std::abs(x[i] * y[i]);
        }
        const double a = scalar.dot(x.data(), y.data(), len);
        const double b = avx2->dot(x.data(), y.data(), len);
        CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, scale));
      }
    }
  }
}

TEST_CASE("matrix product is identical through either active table") {
  const kernels::Table* avx2 = kernels::avx2_table();
  if (!avx2) return;

  const kernels::Table& before = kernels::active();
  Rng rng(23, 0);
  for (int n : {1, 2, 3, 5, 8}) {
    const QMatrix a = test::random_qmatrix(n, rng);
    const QMatrix b = test::random_qmatrix(n, rng);
    const QMatrix want = test::naive_mat_mul(a, b);

    kernels::set_active(kernels::scalar_table());
    const QMatrix c_scalar = a * b;
    kernels::set_active(*avx2);
    const QMatrix c_avx2 = a * b;

    CHECK(test::max_abs_diff(c_scalar, want) <= 1e-12 * n);
    CHECK(test::max_abs_diff(c_avx2, want) <= 1e-12 * n);
    CHECK(test::max_abs_diff(c_scalar, c_avx2) <= 1e-12 * n);
  }
  kernels::set_active(before);
}

TEST_CASE("runtime dispatch picked a variant") {
  const kernels::Table& t = kernels::active();
  CHECK(t.axpy_row != nullptr);
  CHECK(t.dot != nullptr);
  MESSAGE("active kernel table: ", t.name);
}

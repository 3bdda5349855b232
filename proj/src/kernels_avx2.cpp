// AVX2/FMA kernel variants. This translation unit is the only one compiled
// with -mavx2 -mfma; it must not be entered unless the CPU reports both
// (the dispatcher checks).

#include "qpd/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace qpd::kernels {

namespace {

// One quaternion = one 4-double lane [w, x, y, z]. The Hamilton product
// a*b decomposes over the components of a into four permuted, sign-flipped
// copies of b:
//   a.w * [ b0,  b1,  b2,  b3]
//   a.x * [-b1,  b0, -b3,  b2]
//   a.y * [-b2,  b3,  b0, -b1]
//   a.z * [-b3, -b2,  b1,  b0]
void axpy_row_avx2(Quaternion* dst, const Quaternion& a, const Quaternion* src,
                   std::size_t m) {
  const __m256d aw = _mm256_set1_pd(a.w);
  const __m256d ax = _mm256_set1_pd(a.x);
  const __m256d ay = _mm256_set1_pd(a.y);
  const __m256d az = _mm256_set1_pd(a.z);

  const __m256d sx = _mm256_set_pd(+0.0, -0.0, +0.0, -0.0);
  const __m256d sy = _mm256_set_pd(-0.0, +0.0, +0.0, -0.0);
  const __m256d sz = _mm256_set_pd(+0.0, +0.0, -0.0, -0.0);

  const double* s = &src[0].w;
  double* d = &dst[0].w;
  for (std::size_t t = 0; t < m; ++t, s += 4, d += 4) {
    const __m256d b = _mm256_loadu_pd(s);
    __m256d acc = _mm256_loadu_pd(d);
    acc = _mm256_fmadd_pd(aw, b, acc);
    acc = _mm256_fmadd_pd(ax, _mm256_xor_pd(_mm256_permute4x64_pd(b, 0xB1), sx), acc);
    acc = _mm256_fmadd_pd(ay, _mm256_xor_pd(_mm256_permute4x64_pd(b, 0x4E), sy), acc);
    acc = _mm256_fmadd_pd(az, _mm256_xor_pd(_mm256_permute4x64_pd(b, 0x1B), sz), acc);
    _mm256_storeu_pd(d, acc);
  }
}

double dot_avx2(const double* x, const double* y, std::size_t len) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 16 <= len; t += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + t), _mm256_loadu_pd(y + t), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + t + 4), _mm256_loadu_pd(y + t + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(x + t + 8), _mm256_loadu_pd(y + t + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(x + t + 12), _mm256_loadu_pd(y + t + 12), acc3);
  }
  for (; t + 4 <= len; t += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + t), _mm256_loadu_pd(y + t), acc0);
  }
  const __m256d acc = _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; t < len; ++t) sum += x[t] * y[t];
  return sum;
}

}  // namespace

const Table& avx2_table_impl() {
  static const Table t{"avx2", axpy_row_avx2, dot_avx2};
  return t;
}

}  // namespace qpd::kernels

#endif  // __AVX2__ && __FMA__

#include "qpd/kernels.hpp"

namespace qpd::kernels {

namespace {

void axpy_row_scalar(Quaternion* dst, const Quaternion& a, const Quaternion* src,
                     std::size_t m) {
  for (std::size_t t = 0; t < m; ++t) {
    const Quaternion& b = src[t];
    dst[t].w += a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
    dst[t].x += a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y;
    dst[t].y += a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x;
    dst[t].z += a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w;
  }
}

double dot_scalar(const double* x, const double* y, std::size_t len) {
  double acc = 0.0;
  for (std::size_t t = 0; t < len; ++t) acc += x[t] * y[t];
  return acc;
}

}  // namespace

const Table& scalar_table() {
  static const Table t{"scalar", axpy_row_scalar, dot_scalar};
  return t;
}

}  // namespace qpd::kernels

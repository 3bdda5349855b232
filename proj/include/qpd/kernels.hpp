#pragma once

#include <cstddef>

#include "qpd/quaternion.hpp"

// Data-parallel inner loops behind the matrix algebra. Every kernel has a
// scalar reference implementation; an AVX2 variant is selected at runtime
// when the CPU supports it. The two are equivalence-tested against each
// other (results differ only by FMA rounding).
namespace qpd::kernels {

// dst[t] += a * src[t] for t = 0..m-1, quaternion product with a on the
// left. This is the row update of the matrix product C_ij = sum_l A_il B_lj.
using AxpyRowFn = void (*)(Quaternion* dst, const Quaternion& a,
                           const Quaternion* src, std::size_t m);

// Plain dot product over len doubles.
using DotFn = double (*)(const double* x, const double* y, std::size_t len);

struct Table {
  const char* name;
  AxpyRowFn axpy_row;
  DotFn dot;
};

const Table& scalar_table();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks
// AVX2/FMA.
const Table* avx2_table();

// The table used by the matrix routines. Defaults to the best variant the
// CPU supports; tests may pin it.
const Table& active();
void set_active(const Table& table);

}  // namespace qpd::kernels

#pragma once

// Compact group elements for matrix BFS: 8x8 int8 with every entry stored
// doubled, so half-integer matrices (X, Y, X1) are exact.  V-side 7x7
// matrices are padded with a unit in position (7,7).

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "exactalg.hpp"

namespace matgroup {

using Mat8 = std::array<std::int8_t, 64>;

Mat8 from_rat(const exactalg::RatMatrix& m);
exactalg::RatMatrix to_rat(const Mat8& m, int order);
Mat8 identity();

// Product of two doubled matrices, halved.  Throws on odd or out-of-range
// results, which would mean the inputs were not group elements.
Mat8 mul_scalar(const Mat8& a, const Mat8& b);
Mat8 mul_avx2(const Mat8& a, const Mat8& b);

enum class Kernel { Scalar, Avx2 };
Kernel active_kernel();
const char* kernel_name(Kernel k);
bool avx2_available();
// Forces a kernel (tests); Avx2 is ignored when the CPU lacks it.
void force_kernel(Kernel k);
void reset_kernel();
Mat8 mul(const Mat8& a, const Mat8& b);

struct Mat8Hash {
    std::size_t operator()(const Mat8& m) const noexcept;
};

} // namespace matgroup

#include "matgroup.hpp"

#include <atomic>
#include <stdexcept>

namespace matgroup {

Mat8 from_rat(const exactalg::RatMatrix& m) {
    Mat8 r{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            exactalg::Rat v = i < m.order() && j < m.order() ? m.at(i, j) : exactalg::Rat(i == j ? 1 : 0);
            exactalg::Rat t = v * exactalg::Rat(2);
            if (!t.is_integer() || t.num() < -127 || t.num() > 127) throw std::domain_error("Mat8: entry not representable");
            r[i * 8 + j] = (std::int8_t)t.num();
        }
    return r;
}

exactalg::RatMatrix to_rat(const Mat8& m, int order) {
    exactalg::RatMatrix r(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) r.at(i, j) = exactalg::Rat(m[i * 8 + j], 2);
    return r;
}

Mat8 identity() {
    Mat8 r{};
    for (int i = 0; i < 8; ++i) r[i * 9] = 2;
    return r;
}

Mat8 mul_scalar(const Mat8& a, const Mat8& b) {
    Mat8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int s = 0;
            for (int k = 0; k < 8; ++k) s += a[i * 8 + k] * b[k * 8 + j];
            if (s & 1) throw std::domain_error("Mat8: odd product entry");
            s /= 2;
            if (s < -127 || s > 127) throw std::overflow_error("Mat8: product entry out of range");
            r[i * 8 + j] = (std::int8_t)s;
        }
    return r;
}

namespace {

std::atomic<int> g_forced{-1};

Kernel detect() { return avx2_available() ? Kernel::Avx2 : Kernel::Scalar; }

} // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Kernel active_kernel() {
    int f = g_forced.load(std::memory_order_relaxed);
    if (f == (int)Kernel::Scalar) return Kernel::Scalar;
    if (f == (int)Kernel::Avx2 && avx2_available()) return Kernel::Avx2;
    static const Kernel k = detect();
    return k;
}

const char* kernel_name(Kernel k) { return k == Kernel::Avx2 ? "avx2" : "scalar"; }

void force_kernel(Kernel k) { g_forced.store((int)k, std::memory_order_relaxed); }

void reset_kernel() { g_forced.store(-1, std::memory_order_relaxed); }

Mat8 mul(const Mat8& a, const Mat8& b) {
    return active_kernel() == Kernel::Avx2 ? mul_avx2(a, b) : mul_scalar(a, b);
}

std::size_t Mat8Hash::operator()(const Mat8& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : m) {
        h ^= (std::uint8_t)v;
        h *= 1099511628211ull;
    }
    return (std::size_t)h;
}

} // namespace matgroup

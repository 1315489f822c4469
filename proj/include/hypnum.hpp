#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypnum {

using CNum = std::complex<double>;

// A logarithm of a non-zero complex value.  The phase is not reduced, so
// products accumulate winding.
struct LogC {
    double logMag = 0.0;
    double phase = 0.0;

    static LogC of(CNum z);  // principal log; throws on zero
    static LogC from_log(CNum l) { return {l.real(), l.imag()}; }
    CNum as_log() const { return {logMag, phase}; }
    CNum exp() const;
    LogC operator-() const { return {-logMag, -phase}; }
    LogC& operator+=(const LogC& o) { logMag += o.logMag; phase += o.phase; return *this; }
    LogC& operator-=(const LogC& o) { logMag -= o.logMag; phase -= o.phase; return *this; }
    friend LogC operator+(LogC a, const LogC& b) { return a += b; }
    friend LogC operator-(LogC a, const LogC& b) { return a -= b; }
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Distances used by the admissibility checks.
constexpr double kGammaPoleGap = 0.1;
constexpr double kSinZeroGap = 0.05;
double dist_to_nonpositive_int(CNum z);
double dist_to_int(CNum z);

LogC lgamma(CNum z);
LogC log_sin_pi(CNum z);
CNum pochhammer(CNum a, int n);
// Gamma(a+y)/Gamma(a) for complex y.
CNum pochhammer_c(CNum a, CNum y);

struct SeriesCtrl {
    double relTol = 1e-12;
    std::int64_t nMax = std::int64_t(1) << 20;
    int tailWindow = 64;
    void validate() const;
};

struct SeriesResult {
    CNum value;
    std::int64_t termsUsed = 0;
    double errEstimate = 0.0;
    bool converged = false;
};

// Unit-argument p+1Fp.
SeriesResult sum_pfq(std::span<const CNum> nums, std::span<const CNum> dens, const SeriesCtrl& ctrl = {});

// Gamma-prefactored series kept apart so callers can combine prefactors in log space.
struct ScaledSeries {
    LogC scale;
    SeriesResult series;
    CNum value() const { return scale.exp() * series.value; }
};
ScaledSeries f43_star(CNum A, CNum B, CNum C, CNum D, CNum E, CNum F, CNum G, const SeriesCtrl& ctrl = {});

struct EvalDiag {
    bool converged = true;
    bool lowPrecision = false;  // the two M series agreed to more than 9 digits
    double errEstimate = 0.0;   // relative, largest over the series used
    std::int64_t termsUsed = 0;
};

// J[A;B,C,D;E,F,G].
CNum eval_J(std::span<const CNum> x, const SeriesCtrl& ctrl = {}, EvalDiag* diag = nullptr);
// sin(pi A) Gamma(A) J.
CNum eval_K(std::span<const CNum> x, const SeriesCtrl& ctrl = {}, EvalDiag* diag = nullptr);
// L[A,B,C,D;E;F,G].
CNum eval_L(std::span<const CNum> x, const SeriesCtrl& ctrl = {}, EvalDiag* diag = nullptr);
// L through its very-well-poised 7F6 form; needs Re(F-D) > 0.
CNum eval_L_7f6(std::span<const CNum> x, const SeriesCtrl& ctrl = {}, EvalDiag* diag = nullptr);
// M[a;b;c,d,e,f,g,h].
CNum eval_M(std::span<const CNum> w, const SeriesCtrl& ctrl = {}, EvalDiag* diag = nullptr);

// Parameters of the 7F6 used by eval_L_7f6, numerators then denominators.
void l7f6_params(std::span<const CNum> x, std::vector<CNum>& nums, std::vector<CNum>& dens);
bool is_very_well_poised(std::span<const CNum> nums, std::span<const CNum> dens, double tol = 1e-12);
bool is_saalschutzian(std::span<const CNum> nums, std::span<const CNum> dens, double tol = 1e-12);

std::vector<CNum> twiddle_params(std::span<const CNum> x6);

struct PointW {
    CNum a, b, c, d, e, f, g;
    CNum h() const { return 2.0 + 3.0 * a - b - c - d - e - f - g; }
    std::vector<CNum> values() const { return {a, b, c, d, e, f, g, h()}; }
};

struct PointV {
    CNum A, B, C, D, E, F;
    CNum G() const { return 1.0 + A + B + C + D - E - F; }
    std::vector<CNum> values() const { return {A, B, C, D, E, F, G()}; }
};

// Rejection sampling: real parts uniform in [0.1, 0.9], imaginary parts in
// [-0.3, 0.3], until ok() accepts.
PointW sample_point_w(std::mt19937_64& rng, const std::function<bool(const PointW&)>& ok);
PointV sample_point_v(std::mt19937_64& rng, const std::function<bool(const PointV&)>& ok);
// Draw budget for the samplers: 10^4, or HYPCOX_SAMPLE_BUDGET when set.
long sample_budget();

} // namespace hypnum

#include "hypnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <numbers>

namespace hypnum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPoleTol = 1e-12;

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

CNum stirling(CNum z) {
    CNum r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    CNum zi = 1.0 / z, z2 = zi * zi, p = zi;
    for (double c : kStirling) {
        r += c * p;
        p *= z2;
    }
    return r;
}

// Neumaier compensated sum, one instance per real component.
struct KahanC {
    double sr = 0, cr = 0, si = 0, ci = 0;
    static void add1(double& s, double& c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x)) c += (s - t) + x;
        else c += (x - t) + s;
        s = t;
    }
    void add(CNum x) {
        add1(sr, cr, x.real());
        add1(si, ci, x.imag());
    }
    CNum value() const { return {sr + cr, si + ci}; }
};

void require_gamma(CNum z, const char* what) {
    if (dist_to_nonpositive_int(z) < kGammaPoleGap)
        throw DegenerateError(std::string("degenerate point: Gamma argument ") + what + " is within 0.1 of a pole");
}

void require_sin(CNum z, const char* what) {
    if (dist_to_int(z) < kSinZeroGap)
        throw DegenerateError(std::string("degenerate point: sine argument ") + what + " is within 0.05 of an integer");
}

void require_size(std::span<const CNum> x, std::size_t n, const char* fn) {
    if (x.size() != n) throw std::invalid_argument(std::string(fn) + ": expected " + std::to_string(n) + " arguments");
}

LogC sum_lgamma(std::initializer_list<CNum> zs) {
    LogC r;
    for (CNum z : zs) r += lgamma(z);
    return r;
}

void merge(EvalDiag* d, const SeriesResult& s) {
    if (!d) return;
    d->converged = d->converged && s.converged;
    double rel = std::abs(s.value) > 0 ? s.errEstimate / std::abs(s.value) : s.errEstimate;
    d->errEstimate = std::max(d->errEstimate, rel);
    d->termsUsed += s.termsUsed;
}

void require_usable(const SeriesResult& s, const SeriesCtrl& ctrl, const char* fn) {
    if (s.converged) return;
    if (s.errEstimate > std::sqrt(ctrl.relTol) * std::abs(s.value))
        throw ConvergenceError(std::string(fn) + ": series did not converge within nMax terms");
}

// Sum of exp(l_k) * s_k with a common scale so large prefactors never overflow on their own.
CNum combine(std::initializer_list<std::pair<LogC, CNum>> terms) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) m = std::max(m, t.first.logMag);
    CNum acc = 0;
    for (const auto& t : terms) acc += std::polar(std::exp(t.first.logMag - m), t.first.phase) * t.second;
    return std::exp(m) * acc;
}

} // namespace

LogC LogC::of(CNum z) {
    if (z == CNum(0)) throw std::domain_error("log of zero");
    return from_log(std::log(z));
}

CNum LogC::exp() const { return std::polar(std::exp(logMag), phase); }

double dist_to_nonpositive_int(CNum z) {
    double n = std::min(0.0, std::round(z.real()));
    return std::abs(z - n);
}

double dist_to_int(CNum z) { return std::abs(z - std::round(z.real())); }

LogC lgamma(CNum z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::domain_error("lgamma: non-finite argument");
    if (dist_to_nonpositive_int(z) < kPoleTol) throw PoleError("lgamma: argument at a pole");
    if (z.real() < 0.5) return LogC::from_log(std::log(kPi)) - log_sin_pi(z) - lgamma(1.0 - z);
    // The shift product stays below 1e80 in magnitude; its phase is summed so
    // the branch follows the recursion.
    CNum prod = 1;
    double phase = 0;
    while (std::abs(z) <= 40.0) {
        prod *= z;
        phase += std::arg(z);
        z += 1.0;
    }
    return LogC::from_log(stirling(z) - CNum(std::log(std::abs(prod)), phase));
}

LogC log_sin_pi(CNum z) {
    if (dist_to_int(z) < kPoleTol) throw PoleError("log_sin_pi: argument at an integer");
    const CNum i(0, 1);
    if (z.imag() >= 0) return LogC::from_log(-i * kPi * z + std::log(1.0 - std::exp(2.0 * kPi * i * z)) + std::log(i / 2.0));
    return LogC::from_log(i * kPi * z + std::log(1.0 - std::exp(-2.0 * kPi * i * z)) - std::log(2.0 * i));
}

CNum pochhammer(CNum a, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative n");
    CNum r = 1;
    for (int k = 0; k < n; ++k) r *= a + double(k);
    return r;
}

CNum pochhammer_c(CNum a, CNum y) { return (lgamma(a + y) - lgamma(a)).exp(); }

void SeriesCtrl::validate() const {
    if (!(relTol > 0)) throw std::invalid_argument("SeriesCtrl: relTol must be positive");
    if (tailWindow < 1 || nMax < 2 * std::int64_t(tailWindow)) throw std::invalid_argument("SeriesCtrl: need nMax >= 2*tailWindow");
}

SeriesResult sum_pfq(std::span<const CNum> nums, std::span<const CNum> dens, const SeriesCtrl& ctrl) {
    ctrl.validate();
    if (nums.size() != dens.size() + 1) throw std::invalid_argument("sum_pfq: need p = q+1");
    for (CNum b : dens)
        if (dist_to_nonpositive_int(b) < kPoleTol) throw PoleError("sum_pfq: denominator parameter at a non-positive integer");

    auto ratio = [&](std::int64_t n) {
        CNum r = 1.0 / double(n + 1);
        for (CNum a : nums) r *= a + double(n);
        for (CNum b : dens) r /= b + double(n);
        return r;
    };

    std::int64_t stop = -1;
    for (CNum a : nums)
        if (dist_to_nonpositive_int(a) < kPoleTol) {
            std::int64_t k = std::llround(-a.real());
            if (stop < 0 || k < stop) stop = k;
        }
    if (stop >= 0 && stop < ctrl.nMax) {
        KahanC s;
        double sabs = 0;
        CNum t = 1;
        for (std::int64_t n = 0; n <= stop; ++n) {
            s.add(t);
            sabs += std::abs(t);
            t *= ratio(n);
        }
        return {s.value(), stop + 1, 4 * kEps * sabs, true};
    }

    CNum sigma = 0;
    for (CNum b : dens) sigma += b;
    for (CNum a : nums) sigma -= a;
    if (!(sigma.real() > 0)) throw std::domain_error("sum_pfq: series diverges (Re(sum dens - sum nums) <= 0)");

    double pmax = 0;
    for (CNum a : nums) pmax = std::max(pmax, std::abs(a));
    for (CNum b : dens) pmax = std::max(pmax, std::abs(b));
    std::int64_t checkpoint = std::max<std::int64_t>(ctrl.tailWindow, std::int64_t(std::ceil(4 * pmax)));

    // Tail-corrected estimates at N, 2N, 4N, ... carry errors in powers
    // N^-(sigma+k); a Richardson table removes them.
    constexpr int kLevels = 6;
    std::vector<std::vector<CNum>> table;
    std::vector<double> diffs, tols;
    KahanC s;
    double sabs = 0;
    CNum t = 1;
    SeriesResult res;
    for (std::int64_t n = 0;; ++n) {
        if (n == checkpoint) {
            CNum est = s.value() + t * double(n) / sigma;
            std::vector<CNum> row{est};
            if (!table.empty()) {
                const auto& prev = table.back();
                for (int k = 1; k <= kLevels && k <= int(prev.size()); ++k) {
                    CNum f = std::exp((sigma + double(k)) * std::log(2.0));
                    row.push_back((f * row[k - 1] - prev[k - 1]) / (f - 1.0));
                }
            }
            table.push_back(row);
            res.value = row.back();
            res.termsUsed = n;
            double noise = 4 * kEps * sabs;
            if (table.size() >= 2) {
                diffs.push_back(std::abs(table.back().back() - table[table.size() - 2].back()));
                tols.push_back(std::max(ctrl.relTol * std::abs(res.value), noise));
                std::size_t m = diffs.size();
                if (m >= 2 && diffs[m - 1] <= tols[m - 1] && diffs[m - 2] <= tols[m - 2]) {
                    res.errEstimate = std::max(diffs[m - 1], noise);
                    res.converged = res.errEstimate <= ctrl.relTol * std::abs(res.value);
                    return res;
                }
                res.errEstimate = std::max(diffs[m - 1], noise);
            }
            if (2 * checkpoint > ctrl.nMax) break;
            checkpoint *= 2;
        }
        s.add(t);
        sabs += std::abs(t);
        t *= ratio(n);
    }
    res.converged = false;
    return res;
}

ScaledSeries f43_star(CNum A, CNum B, CNum C, CNum D, CNum E, CNum F, CNum G, const SeriesCtrl& ctrl) {
    if (std::abs(E + F + G - A - B - C - D - 1.0) > 1e-9) throw std::invalid_argument("f43_star: parameters are not Saalschutzian");
    const CNum nums[] = {A, B, C, D}, dens[] = {E, F, G};
    ScaledSeries r;
    r.scale = sum_lgamma({A, B, C, D}) - sum_lgamma({E, F, G});
    r.series = sum_pfq(nums, dens, ctrl);
    return r;
}

CNum eval_J(std::span<const CNum> x, const SeriesCtrl& ctrl, EvalDiag* diag) {
    require_size(x, 7, "eval_J");
    CNum A = x[0], B = x[1], C = x[2], D = x[3], E = x[4], F = x[5], G = x[6];
    require_sin(A, "A");
    for (CNum z : {A, B, C, D, E, F, G, 1.0 + A - E, 1.0 + A - F, 1.0 + A - G, 1.0 + A - B, 1.0 + A - C, 1.0 + A - D})
        require_gamma(z, "of J");
    LogC pre = -log_sin_pi(A) - sum_lgamma({A, B, C, D, A, 1.0 + A - E, 1.0 + A - F, 1.0 + A - G});
    auto t1 = f43_star(A, B, C, D, E, F, G, ctrl);
    auto t2 = f43_star(A, 1.0 + A - E, 1.0 + A - F, 1.0 + A - G, 1.0 + A - B, 1.0 + A - C, 1.0 + A - D, ctrl);
    require_usable(t1.series, ctrl, "eval_J");
    require_usable(t2.series, ctrl, "eval_J");
    merge(diag, t1.series);
    merge(diag, t2.series);
    return combine({{pre + t1.scale, t1.series.value}, {pre + t2.scale, t2.series.value}});
}

CNum eval_K(std::span<const CNum> x, const SeriesCtrl& ctrl, EvalDiag* diag) {
    CNum j = eval_J(x, ctrl, diag);
    return (log_sin_pi(x[0]) + lgamma(x[0])).exp() * j;
}

CNum eval_L(std::span<const CNum> x, const SeriesCtrl& ctrl, EvalDiag* diag) {
    require_size(x, 7, "eval_L");
    CNum A = x[0], B = x[1], C = x[2], D = x[3], E = x[4], F = x[5], G = x[6];
    require_sin(E, "E");
    for (CNum z : {A, B, C, D, E, F, G, 1.0 - E + A, 1.0 - E + B, 1.0 - E + C, 1.0 - E + D, 2.0 - E, 1.0 + F - E, 1.0 + G - E})
        require_gamma(z, "of L");
    LogC pre = -log_sin_pi(E) - sum_lgamma({A, B, C, D, 1.0 - E + A, 1.0 - E + B, 1.0 - E + C, 1.0 - E + D});
    auto t1 = f43_star(A, B, C, D, E, F, G, ctrl);
    auto t2 = f43_star(1.0 + A - E, 1.0 + B - E, 1.0 + C - E, 1.0 + D - E, 2.0 - E, 1.0 + F - E, 1.0 + G - E, ctrl);
    require_usable(t1.series, ctrl, "eval_L");
    require_usable(t2.series, ctrl, "eval_L");
    merge(diag, t1.series);
    merge(diag, t2.series);
    return combine({{pre + t1.scale, t1.series.value}, {pre + t2.scale, -t2.series.value}});
}

void l7f6_params(std::span<const CNum> x, std::vector<CNum>& nums, std::vector<CNum>& dens) {
    require_size(x, 7, "l7f6_params");
    CNum A = x[0], B = x[1], C = x[2], D = x[3], E = x[4], G = x[6];
    CNum a = D + G - E, b = G - A, c = G - B, d = G - C, e = D, f = 1.0 + D - E;
    nums = {a, 1.0 + a / 2.0, b, c, d, e, f};
    dens = {a / 2.0, 1.0 + a - b, 1.0 + a - c, 1.0 + a - d, 1.0 + a - e, 1.0 + a - f};
}

CNum eval_L_7f6(std::span<const CNum> x, const SeriesCtrl& ctrl, EvalDiag* diag) {
    require_size(x, 7, "eval_L_7f6");
    if (!((x[5] - x[3]).real() > 0)) throw std::invalid_argument("eval_L_7f6: needs Re(F-D) > 0");
    std::vector<CNum> nums, dens;
    l7f6_params(x, nums, dens);
    CNum a = nums[0];
    CNum tail = 2.0 + 2.0 * a - nums[2] - nums[3] - nums[4] - nums[5] - nums[6];
    for (CNum z : {1.0 + a, dens[1], dens[2], dens[3], dens[4], dens[5], tail, dens[0]}) require_gamma(z, "of the 7F6 form");
    LogC pre = lgamma(1.0 + a) - LogC::from_log(std::log(kPi)) -
               sum_lgamma({dens[1], dens[2], dens[3], dens[4], dens[5], tail});
    auto s = sum_pfq(nums, dens, ctrl);
    require_usable(s, ctrl, "eval_L_7f6");
    merge(diag, s);
    return combine({{pre, s.value}});
}

CNum eval_M(std::span<const CNum> w, const SeriesCtrl& ctrl, EvalDiag* diag) {
    require_size(w, 8, "eval_M");
    CNum a = w[0], b = w[1];
    CNum sum = 0;
    for (int k = 1; k < 8; ++k) sum += w[k];
    if (std::abs(2.0 + 3.0 * a - sum) > 1e-9) throw std::invalid_argument("eval_M: arguments are off the hyperplane 2+3a = b+...+h");
    require_sin(b - a, "b-a");

    // V(a0; r_1..r_7): (pi/2) Gamma[1+a0, r / 1+a0-r] times the very-well-poised 9F8.
    auto V = [&](CNum a0, const std::array<CNum, 7>& r, LogC& scale) {
        std::vector<CNum> nums{a0, 1.0 + a0 / 2.0}, dens{a0 / 2.0};
        require_gamma(1.0 + a0, "of M");
        require_gamma(a0 / 2.0, "of M");
        scale = LogC::from_log(std::log(kPi / 2.0)) + lgamma(1.0 + a0);
        for (CNum x : r) {
            require_gamma(x, "of M");
            require_gamma(1.0 + a0 - x, "of M");
            nums.push_back(x);
            dens.push_back(1.0 + a0 - x);
            scale += lgamma(x) - lgamma(1.0 + a0 - x);
        }
        auto s = sum_pfq(nums, dens, ctrl);
        require_usable(s, ctrl, "eval_M");
        merge(diag, s);
        return s.value;
    };

    std::array<CNum, 7> r1, r2;
    r1[0] = b;
    r2[0] = b;
    for (int k = 0; k < 6; ++k) {
        r1[k + 1] = w[2 + k];
        r2[k + 1] = b - a + w[2 + k];
    }
    LogC l1, l2;
    CNum v1 = V(a, r1, l1);
    CNum v2 = V(2.0 * b - a, r2, l2);

    LogC den = log_sin_pi(b - a);
    for (int k = 1; k < 8; ++k) den += lgamma(w[k]);
    for (int k = 2; k < 8; ++k) den += lgamma(b - a + w[k]);

    CNum num = combine({{l1, v1}, {l2, -v2}});
    if (diag) {
        double m1 = std::abs(combine({{l1, v1}})), m2 = std::abs(combine({{l2, v2}}));
        if (std::abs(num) < 1e-9 * std::max(m1, m2)) diag->lowPrecision = true;
    }
    if (num == CNum(0)) return 0;
    return (LogC::of(num) - den).exp();
}

bool is_very_well_poised(std::span<const CNum> nums, std::span<const CNum> dens, double tol) {
    if (nums.size() != dens.size() + 1 || nums.size() < 3) return false;
    CNum a = nums[0];
    if (std::abs(nums[1] - (1.0 + a / 2.0)) > tol || std::abs(dens[0] - a / 2.0) > tol) return false;
    for (std::size_t k = 2; k < nums.size(); ++k)
        if (std::abs(nums[k] + dens[k - 1] - (1.0 + a)) > tol) return false;
    return true;
}

bool is_saalschutzian(std::span<const CNum> nums, std::span<const CNum> dens, double tol) {
    if (nums.size() != dens.size() + 1) return false;
    CNum s = 0;
    for (CNum b : dens) s += b;
    for (CNum a : nums) s -= a;
    return std::abs(s - 1.0) <= tol;
}

std::vector<CNum> twiddle_params(std::span<const CNum> x) {
    require_size(x, 6, "twiddle_params");
    CNum s = x[0] + x[1] + x[2];
    return {
        0.5 + s + x[3] + x[4] + x[5],
        0.5 + s - x[3] - x[4] + x[5],
        0.5 + s + x[3] - x[4] - x[5],
        0.5 + s - x[3] + x[4] - x[5],
        1.0 + 2.0 * x[1] + 2.0 * x[2],
        1.0 + 2.0 * x[0] + 2.0 * x[1],
        1.0 + 2.0 * x[0] + 2.0 * x[2],
    };
}

long sample_budget() {
    if (const char* env = std::getenv("HYPCOX_SAMPLE_BUDGET")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && *end == 0 && n > 0) return n;
    }
    return 10000;
}

namespace {
template <class P, class Fill>
P sample(std::mt19937_64& rng, const std::function<bool(const P&)>& ok, Fill fill) {
    std::uniform_real_distribution<double> re(0.1, 0.9), im(-0.3, 0.3);
    auto draw = [&] { double r = re(rng); return CNum(r, im(rng)); };
    long budget = sample_budget();
    for (long tries = 0; tries < budget; ++tries) {
        P p = fill(draw);
        try {
            if (ok(p)) return p;
        } catch (const std::domain_error&) {
        }
    }
    throw std::runtime_error("point sampling: no admissible point in " + std::to_string(budget) + " draws");
}
} // namespace

PointW sample_point_w(std::mt19937_64& rng, const std::function<bool(const PointW&)>& ok) {
    return sample<PointW>(rng, ok, [](auto draw) {
        PointW p;
        for (CNum* z : {&p.a, &p.b, &p.c, &p.d, &p.e, &p.f, &p.g}) *z = draw();
        return p;
    });
}

PointV sample_point_v(std::mt19937_64& rng, const std::function<bool(const PointV&)>& ok) {
    return sample<PointV>(rng, ok, [](auto draw) {
        PointV p;
        for (CNum* z : {&p.A, &p.B, &p.C, &p.D, &p.E, &p.F}) *z = draw();
        return p;
    });
}

} // namespace hypnum

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hypnum.hpp"

using namespace hypnum;
using std::numbers::pi;

namespace {

// Reference values computed with mpmath at 30 digits.
const PointV kV{{.31, .12}, {.47, -.08}, {.62, .05}, {.28, .21}, {.83, -.11}, {.71, .17}};
const PointW kW{{.42, .07}, {.33, -.15}, {.58, .11}, {.26, -.04}, {.71, .19}, {.49, -.22}, {.64, .09}};

double rel(CNum got, CNum want) { return std::abs(got - want) / std::abs(want); }

double phase_gap(double a, double b) {
    double d = std::remainder(a - b, 2 * pi);
    return std::abs(d);
}

void check_log(LogC got, CNum want, double tol) {
    CHECK(std::abs(got.logMag - want.real()) < tol * std::max(1.0, std::abs(want.real())));
    CHECK(phase_gap(got.phase, want.imag()) < tol * std::max(1.0, std::abs(want.imag())));
}

std::vector<CNum> conj_all(std::vector<CNum> v) {
    for (auto& z : v) z = std::conj(z);
    return v;
}

} // namespace

TEST_CASE("elementary gamma values") {
    CHECK(hypnum::lgamma(CNum(5.0)).exp().real() == doctest::Approx(24).epsilon(1e-13));
    CHECK(hypnum::lgamma(CNum(0.5)).exp().real() == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    CHECK(std::abs(pochhammer(2.0, 3) - CNum(24)) < 1e-13);
    CHECK(rel(pochhammer_c(3.0, 1.5), 5.8158641982837244646) < 1e-13);
    CHECK(std::abs(log_sin_pi(0.5).as_log()) < 1e-15);
    CHECK(std::abs(log_sin_pi(1.0 / 6).exp() - CNum(0.5)) < 1e-15);
    CHECK_THROWS_AS(hypnum::lgamma(CNum(-2.0)), PoleError);
    CHECK_THROWS_AS(hypnum::lgamma(CNum(0.0)), PoleError);
    CHECK_THROWS_AS(log_sin_pi(3.0), PoleError);
}

TEST_CASE("log gamma against reference values") {
    check_log(hypnum::lgamma({1, 2}), {-1.8760787864309293412, 0.12964631630978831138}, 1e-13);
    check_log(hypnum::lgamma({-3.7, 0.2}), {-1.6364330925624564172, -12.663282679635771969}, 1e-12);
    check_log(hypnum::lgamma({30, 70}), {17.123846386778869599, 267.68964007442859004}, 1e-13);
    check_log(log_sin_pi({0.3, 40}), {124.97055896303178423, 0.62831853071795868257}, 1e-13);
}

TEST_CASE("log gamma on |z| = 1000") {
    const double r = 707.1067811865476;
    struct Ref { CNum z, want; } refs[] = {
        {{1000, 0}, {5905.220423209181211826, 0}},
        {{0, 1000}, {-1573.331265901183015016, 5906.969797485403492632}},
        {{-600, 800}, {-5318.626104966116031844, 3396.518546448341258632}},
        {{r, r}, {3619.518571908378055813, 4732.381428621427132506}},
    };
    for (const auto& x : refs) {
        auto got = hypnum::lgamma(x.z);
        CHECK(std::abs(got.logMag - x.want.real()) < 1e-10 * std::abs(x.want.real()));
        CHECK(phase_gap(got.phase, x.want.imag()) < 1e-9);
    }
}

TEST_CASE("reflection and recursion hold on random points") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-20, 20);
    int used = 0;
    while (used < 300) {
        CNum z{u(rng), u(rng)};
        if (dist_to_int(z) < 0.1 || std::abs(z.imag()) > 15) continue;
        ++used;
        CNum refl = hypnum::lgamma(z).as_log() + hypnum::lgamma(1.0 - z).as_log() + log_sin_pi(z).as_log();
        CHECK(std::abs(refl.real() - std::log(pi)) < 1e-11);
        CHECK(phase_gap(refl.imag(), 0) < 1e-11);
        CNum rec = hypnum::lgamma(z + 1.0).as_log() - hypnum::lgamma(z).as_log() - std::log(z);
        CHECK(std::abs(rec.real()) < 1e-11);
        CHECK(phase_gap(rec.imag(), 0) < 1e-11);
    }
}

TEST_CASE("lgamma is conjugate symmetric") {
    for (CNum z : {CNum(0.3, 0.7), CNum(-4.2, 1.1), CNum(12, -30)}) {
        auto a = hypnum::lgamma(z), b = hypnum::lgamma(std::conj(z));
        CHECK(a.logMag == doctest::Approx(b.logMag).epsilon(1e-14));
        CHECK(phase_gap(a.phase, -b.phase) < 1e-12);
    }
}

TEST_CASE("terminating and classical series") {
    CNum n2[] = {-2.0, 1.0}, d2[] = {1.0};
    auto r = sum_pfq(n2, d2);
    CHECK(r.converged);
    CHECK(std::abs(r.value) < 1e-15);
    // 4F3(-1, 1, 1, 1; 2, 2, 4) = 1 - 1/16
    CNum n4[] = {-1.0, 1.0, 1.0, 1.0}, d4[] = {2.0, 2.0, 4.0};
    CHECK(std::abs(sum_pfq(n4, d4).value - CNum(0.9375)) < 1e-15);
    // Saalschutz: 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
    CNum a{0.3, 0.2}, b{0.45, -0.1}, c{1.7, 0.05};
    int n = 5;
    CNum n3[] = {CNum(-n), a, b}, d3[] = {c, 1.0 + a + b - c - double(n)};
    CNum want = pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n));
    CHECK(rel(sum_pfq(n3, d3).value, want) < 1e-13);
}

TEST_CASE("4F3 values against references") {
    const auto x = kV.values();
    CNum nums[] = {x[0], x[1], x[2], x[3]}, dens[] = {x[4], x[5], x[6]};
    auto r = sum_pfq(nums, dens);
    CHECK(r.converged);
    CHECK(rel(r.value, {1.069500118802471791, 0.054720690977119011544}) < 1e-11);
    auto s = f43_star(x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
    CHECK(rel(s.value(), {11.388975293254539868, -10.396834682848103042}) < 1e-11);
}

TEST_CASE("f43_star is symmetric in its numerator and denominator groups") {
    const auto x = kV.values();
    auto base = f43_star(x[0], x[1], x[2], x[3], x[4], x[5], x[6]).value();
    CHECK(rel(f43_star(x[2], x[0], x[3], x[1], x[4], x[5], x[6]).value(), base) < 1e-11);
    CHECK(rel(f43_star(x[0], x[1], x[2], x[3], x[6], x[4], x[5]).value(), base) < 1e-11);
}

TEST_CASE("J, L and M against references") {
    const auto v = kV.values();
    const auto w = kW.values();
    EvalDiag d;
    CHECK(rel(eval_J(v, {}, &d), {0.061259415903286172671, 0.041432229471081533181}) < 1e-10);
    CHECK(d.converged);
    CHECK(rel(eval_L(v), {0.10986876807016815509, 0.18766636566390597206}) < 1e-10);
    CHECK(rel(eval_L_7f6(v), {0.10986876807016815509, 0.18766636566390597206}) < 1e-9);
    CHECK(rel(eval_M(w), {0.014066833703459583888, -0.033163991811059754522}) < 1e-9);
}

TEST_CASE("J, L and M commute with conjugation") {
    const auto v = kV.values();
    const auto w = kW.values();
    CHECK(rel(eval_J(conj_all(v)), std::conj(eval_J(v))) < 1e-12);
    CHECK(rel(eval_L(conj_all(v)), std::conj(eval_L(v))) < 1e-12);
    CHECK(rel(eval_M(conj_all(w)), std::conj(eval_M(w))) < 1e-10);
}

TEST_CASE("a tighter tolerance moves J within the reported error") {
    const auto v = kV.values();
    SeriesCtrl loose, tight;
    loose.relTol = 1e-8;
    tight.relTol = 1e-13;
    EvalDiag dl;
    CNum a = eval_J(v, loose, &dl), b = eval_J(v, tight);
    CHECK(dl.converged);
    CHECK(rel(a, b) <= std::max(10 * dl.errEstimate, 1e-8));
}

TEST_CASE("the 7F6 form needs Re(F - D) > 0 and is very well poised") {
    auto v = kV.values();
    std::vector<CNum> nums, dens;
    l7f6_params(v, nums, dens);
    CHECK(nums.size() == 7);
    CHECK(dens.size() == 6);
    CHECK(is_very_well_poised(nums, dens));
    std::swap(v[3], v[5]);  // now Re(F - D) < 0
    v[6] = 1.0 + v[0] + v[1] + v[2] + v[3] - v[4] - v[5];
    CHECK_THROWS_AS(eval_L_7f6(v), std::invalid_argument);
}

TEST_CASE("twiddle parameters") {
    CNum zero[6] = {};
    auto t = twiddle_params(zero);
    REQUIRE(t.size() == 7);
    for (int k = 0; k < 4; ++k) CHECK(t[k] == CNum(0.5));
    for (int k = 4; k < 7; ++k) CHECK(t[k] == CNum(1.0));
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int n = 0; n < 20; ++n) {
        CNum x[6];
        for (auto& z : x) z = {u(rng), u(rng)};
        auto p = twiddle_params(x);
        CHECK(is_saalschutzian(std::span(p).first(4), std::span(p).subspan(4)));
    }
}

TEST_CASE("argument checks") {
    std::vector<CNum> shortArgs(5, 0.3);
    CHECK_THROWS_AS(eval_J(shortArgs), std::invalid_argument);
    CHECK_THROWS_AS(eval_M(shortArgs), std::invalid_argument);
    SeriesCtrl bad;
    bad.relTol = -1;
    CHECK_THROWS(bad.validate());
    auto v = kV.values();
    v[4] = -2.0;  // denominator at a pole
    v[6] = 1.0 + v[0] + v[1] + v[2] + v[3] - v[4] - v[5];
    CHECK_THROWS_AS(eval_J(v), DegenerateError);
}

TEST_CASE("samplers are seeded and budgeted") {
    auto ok = [](const PointW& p) { return p.a.real() > 0.5; };
    std::mt19937_64 r1(42), r2(42);
    auto p = sample_point_w(r1, ok), q = sample_point_w(r2, ok);
    CHECK(p.a == q.a);
    CHECK(p.g == q.g);
    CHECK(p.a.real() > 0.5);
    CHECK(std::abs(p.h() - (2.0 + 3.0 * p.a - p.b - p.c - p.d - p.e - p.f - p.g)) == 0);

    CHECK(sample_budget() == 10000);
    setenv("HYPCOX_SAMPLE_BUDGET", "25", 1);
    CHECK(sample_budget() == 25);
    CHECK_THROWS_AS(sample_point_v(r1, [](const PointV&) { return false; }), std::runtime_error);
    setenv("HYPCOX_SAMPLE_BUDGET", "junk", 1);
    CHECK(sample_budget() == 10000);
    unsetenv("HYPCOX_SAMPLE_BUDGET");
}

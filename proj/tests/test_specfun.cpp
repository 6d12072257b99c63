#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "specfun.hpp"
#include "support/mellin_barnes.hpp"

using namespace linklab;
using specfun::MeijerGOptions;
using specfun::MeijerGSpec;

namespace {
constexpr double kModAlpha = 4.0, kModBeta = 1.9, kModXi = 10.45;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

MeijerGSpec gg_cdf_spec(double alpha, double beta, double xi, double z) {
    const double x2 = xi * xi;
    return MeijerGSpec{3, 1, {1.0, x2 + 1.0}, {x2, alpha, beta, 0.0}, z};
}

// printed fixed-gain Gamma-Gamma outage kernel (the G^{2,7}_{9,4} form)
MeijerGSpec eq22_spec(double alpha, double beta, double xi, double z) {
    const double x2 = xi * xi;
    return MeijerGSpec{2,
                       7,
                       {0.0, (1 - x2) / 2, (2 - x2) / 2, (1 - alpha) / 2, (2 - alpha) / 2,
                        (1 - beta) / 2, (2 - beta) / 2, 0.5, 1.0},
                       {0.0, 0.5, -x2 / 2, (1 - x2) / 2},
                       z};
}
}  // namespace

TEST_CASE("log_gamma basics") {
    CHECK(specfun::log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rel_err(specfun::log_gamma(0.5), 0.5723649429247000870717) < 1e-13);
    // reference values from a 40-digit arbitrary-precision evaluation
    CHECK(rel_err(specfun::log_gamma(4.2), 2.048555636960589809021) < 1e-13);
    CHECK(rel_err(specfun::log_gamma(12.75), 19.35823122022435814041) < 1e-13);
    CHECK_THROWS_AS(specfun::log_gamma(0.0), domain_error);
    CHECK_THROWS_AS(specfun::log_gamma(-3.1), domain_error);
    CHECK_THROWS_AS(specfun::log_gamma(std::nan("")), domain_error);
    CHECK_THROWS_AS(specfun::log_gamma(HUGE_VAL), domain_error);
}

TEST_CASE("exponential reduction G^{1,0}_{0,1}(z) = e^{-z} across five decades") {
    for (double z : {0.01, 0.1, 1.0, 10.0, 50.0}) {
        const double got = specfun::meijer_g({1, 0, {}, {0.0}, z});
        CHECK(rel_err(got, std::exp(-z)) < 1e-10);
    }
}

TEST_CASE("reduction G^{2,0}_{0,2}(z | -; 0, 1/2) = sqrt(pi) e^{-2 sqrt z}") {
    for (double z : {0.01, 1.0, 25.0}) {
        const double got = specfun::meijer_g({2, 0, {}, {0.0, 0.5}, z});
        CHECK(rel_err(got, std::sqrt(M_PI) * std::exp(-2 * std::sqrt(z))) < 1e-10);
    }
}

TEST_CASE("Gamma-Gamma CDF instance vs frozen reference") {
    // mpmath: meijerg([[1],[xi^2+1]], [[xi^2,4,1.9],[0]], 2.5) at 40 digits
    const double got = specfun::meijer_g(gg_cdf_spec(kModAlpha, kModBeta, kModXi, 2.5));
    CHECK(rel_err(got, 0.01185971737120055294491) < 1e-10);
}

TEST_CASE("Gamma-Gamma CDF instance vs contour-quadrature oracle") {
    for (double z : {0.3, 2.5, 20.0}) {
        const auto spec = gg_cdf_spec(kModAlpha, kModBeta, kModXi, z);
        const double got = specfun::meijer_g(spec);
        const double want = mb_oracle::meijer_g(spec.m, spec.n, spec.a, spec.b, z);
        CHECK(rel_err(got, want) < 1e-9);
    }
}

TEST_CASE("coincident-pole instance vs contour oracle and Bessel reduction") {
    // b = (1, 0, 1/2): the fixed-gain NegExp kernel family; 1 - 0 collides
    for (double z : {0.05, 0.8}) {
        const double got = specfun::meijer_g({3, 0, {}, {1.0, 0.0, 0.5}, z});
        const double want = mb_oracle::meijer_g(3, 0, {}, {1.0, 0.0, 0.5}, z);
        CHECK(rel_err(got, want) < 1e-8);
    }
    // exactly coincident: G^{2,0}_{0,2}(z | -; 0, 0) = 2 K_0(2 sqrt z)
    const double z = 1.3;
    const double got = specfun::meijer_g({2, 0, {}, {0.0, 0.0}, z});
    const double want = 2.0 * std::cyl_bessel_k(0.0, 2.0 * std::sqrt(z));
    CHECK(rel_err(got, want) < 1e-8);
}

TEST_CASE("reciprocal flip: oversized p is routed through the 1/z form") {
    // G^{0,3}_{3,0}(Z | 0,1,1/2; -) = G^{3,0}_{0,3}(1/Z | -; 1,0,1/2)
    const double Z = 125.0;
    const double got = specfun::meijer_g({0, 3, {0.0, 1.0, 0.5}, {}, Z});
    const double want = specfun::meijer_g({3, 0, {}, {1.0, 0.0, 0.5}, 1.0 / Z});
    CHECK(rel_err(got, want) < 1e-9);
}

TEST_CASE("flip self-consistency on the printed outage kernel") {
    // evaluating the p>q printed form must match evaluating its pre-flipped
    // reciprocal twin directly
    const double x2 = kModXi * kModXi;
    const double z = 28210.48352241293416579;
    const double direct = specfun::meijer_g(eq22_spec(kModAlpha, kModBeta, kModXi, z));
    MeijerGSpec flipped{7,
                       2,
                       {1.0, 0.5, (2 + x2) / 2, (1 + x2) / 2},
                       {1.0, (1 + x2) / 2, x2 / 2, (1 + kModAlpha) / 2, kModAlpha / 2,
                        (1 + kModBeta) / 2, kModBeta / 2, 0.5, 0.0},
                       1.0 / z};
    const double twin = specfun::meijer_g(flipped);
    CHECK(rel_err(direct, twin) < 1e-9);
    // frozen cross-implementation reference (prototype evaluated at 40 digits)
    CHECK(rel_err(direct, 1.095947060702739647542e-5) < 1e-10);
}

TEST_CASE("epsilon-shift stability (Richardson sanity)") {
    // real collision (alpha = 4 makes the flipped kernel's b-list contain 1 and 2)
    const MeijerGSpec spec = eq22_spec(kModAlpha, kModBeta, kModXi, 28210.483522412934);
    MeijerGOptions o1, o2;
    o1.extrapolate_shift = o2.extrapolate_shift = false;
    o1.pole_shift = 1e-8;
    o2.pole_shift = 5e-9;
    const double f1 = specfun::meijer_g(spec, o1);
    const double f2 = specfun::meijer_g(spec, o2);
    CHECK(rel_err(f1, f2) < 1e-8);

    // force-shift a collision-free instance; extrapolated value must match
    // the unshifted evaluation
    const MeijerGSpec cdf = gg_cdf_spec(kModAlpha, kModBeta, kModXi, 2.5);
    MeijerGOptions forced;
    forced.shift_all_poles = true;
    CHECK(rel_err(specfun::meijer_g(cdf, forced), specfun::meijer_g(cdf)) < 1e-8);
}

TEST_CASE("large-argument instance matches the scaled-erfc Laplace identity") {
    // (1/(sqrt(pi) s)) G^{2,1}_{1,2}(a^2/s | 0; 0, 1/2) == sqrt_exp_laplace(a, s)
    for (auto [a, s] : {std::pair{0.5, 1.0}, {2.0, 0.7}, {6.0, 1.3}}) {
        const double z = a * a / s;
        const double G = specfun::meijer_g({2, 1, {0.0}, {0.0, 0.5}, z});
        const double got = G / (std::sqrt(M_PI) * s);
        CHECK(rel_err(got, specfun::sqrt_exp_laplace(a, s)) < 1e-10);
    }
}

TEST_CASE("sqrt_exp_laplace endpoints and branches") {
    CHECK(specfun::sqrt_exp_laplace(0.0, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    // large-a asymptotic branch vs a midpoint-rule reference on the
    // substituted integrand 2u exp(-s u^2 - 2 a u), u = sqrt(t)
    const double a = 40.0, s = 1.0;
    double ref = 0.0;
    const int N = 4'000'000;
    const double h = (40.0 / a) / N;  // e^{-2au} support: u <= 40/a
    for (int i = 0; i < N; ++i) {
        const double u = (i + 0.5) * h;
        ref += 2 * u * std::exp(-s * u * u - 2 * a * u) * h;
    }
    CHECK(rel_err(specfun::sqrt_exp_laplace(a, s), ref) < 1e-8);
    CHECK_THROWS_AS(specfun::sqrt_exp_laplace(-1.0, 1.0), domain_error);
    CHECK_THROWS_AS(specfun::sqrt_exp_laplace(1.0, 0.0), domain_error);
}

TEST_CASE("spec validation errors") {
    CHECK_THROWS_AS(specfun::meijer_g({1, 0, {}, {0.0}, -2.0}), domain_error);
    CHECK_THROWS_AS(specfun::meijer_g({1, 0, {}, {0.0}, 0.0}), domain_error);
    CHECK_THROWS_AS(specfun::meijer_g({2, 0, {}, {0.0}, 1.0}), domain_error);  // m > q
    // a_1 - b_1 = 2: integrand pole families overlap
    CHECK_THROWS_AS(specfun::meijer_g({1, 1, {2.0}, {0.0}, 1.0}), domain_error);
    // p == q with z on the unit circle: no convergent side
    CHECK_THROWS_AS(specfun::meijer_g({1, 0, {0.5}, {0.0}, 1.0}), unsupported_instance);
}

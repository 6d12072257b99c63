#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "linkmodel.hpp"
#include "quadrature.hpp"
#include "rng.hpp"

using namespace linklab;
using channels::RayleighRf;
using linkmodel::AdaptiveGain;
using linkmodel::FixedGain;
using linkmodel::RelayScheme;

TEST_CASE("selection CDF basics") {
    RayleighRf rf(5.0);
    const double e1 = 1.0 - std::exp(-1.0);
    CHECK(linkmodel::best_user_cdf(rf, 1, 5.0) == doctest::Approx(e1).epsilon(1e-13));
    CHECK(linkmodel::best_user_cdf(rf, 2, 5.0) == doctest::Approx(e1 * e1).epsilon(1e-13));
    CHECK(linkmodel::best_user_cdf(rf, 2, 5.0) == doctest::Approx(0.3995764009).epsilon(1e-9));
    CHECK_THROWS_AS(linkmodel::best_user_cdf(rf, 0, 1.0), domain_error);
}

TEST_CASE("selection CDF matches empirical max-of-5") {
    RayleighRf rf(2.0);
    const double g = 1.0;  // 0.5 * mean
    const int n = 1'000'000;
    int count = 0;
    for (int i = 0; i < n; ++i) {
        rng::TrialRng r(5, i);
        double best = 0.0;
        for (int u = 0; u < 5; ++u) best = std::max(best, channels::sample_snr(rf, r));
        if (best <= g) ++count;
    }
    const double want = linkmodel::best_user_cdf(rf, 5, g);
    const double se = std::sqrt(want * (1 - want) / n);
    CHECK(std::abs(count / double(n) - want) < 3 * se);
}

TEST_CASE("selection pdf: product and expansion forms agree") {
    RayleighRf rf(3.0);
    for (int n : {1, 2, 3, 5, 8}) {
        for (double g : {0.1, 1.0, 3.0, 9.0, 30.0}) {
            const double a = linkmodel::best_user_pdf(rf, n, g);
            const double b = linkmodel::best_user_pdf_expansion(rf, n, g);
            CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
        }
    }
    // n = 1 reduces to the single-user exponential density
    CHECK(linkmodel::best_user_pdf(rf, 1, 2.0) ==
          doctest::Approx(std::exp(-2.0 / 3.0) / 3.0).epsilon(1e-14));
}

TEST_CASE("selection pdf normalizes") {
    RayleighRf rf(2.5);
    auto f = [&](double g) { return linkmodel::best_user_pdf(rf, 4, g); };
    const double integral = quadrature::integrate_finite(f, 0.0, 50.0 * 2.5, 1e-11, 1e-10).value;
    CHECK(std::abs(integral - 1.0) < 1e-8);
}

TEST_CASE("end-to-end SNR combining") {
    CHECK(linkmodel::end_to_end_snr(FixedGain{1.0}, 1.0, 1.0) == doctest::Approx(0.5));
    CHECK(linkmodel::end_to_end_snr(AdaptiveGain{}, 1.0, 1.0) == doctest::Approx(1.0 / 3.0));
    // large FSO SNR: fixed-gain end-to-end approaches the RF SNR
    CHECK(std::abs(linkmodel::end_to_end_snr(FixedGain{1.0}, 1e6, 7.0) / 7.0 - 1.0) < 1e-5);
    CHECK(linkmodel::end_to_end_snr_min_approx(10.0, 3.0) == 3.0);
    CHECK(linkmodel::end_to_end_snr_min_approx(3.0, 3.0) == 3.0);
    CHECK_THROWS_AS(linkmodel::end_to_end_snr(AdaptiveGain{}, -1.0, 1.0), domain_error);
}

TEST_CASE("min approximation quality at high SNR") {
    for (double gf = 20.0; gf <= 2000.0; gf *= 2.7) {
        for (double gr = 20.0; gr <= 2000.0; gr *= 2.7) {
            const double exact = linkmodel::end_to_end_snr(AdaptiveGain{}, gf, gr);
            const double approx = linkmodel::end_to_end_snr_min_approx(gf, gr);
            CHECK(approx >= exact);  // min is an upper bound
            CHECK((approx - exact) / approx < 0.15);
        }
    }
}

TEST_CASE("combining bounds and monotonicity (randomized)") {
    for (int i = 0; i < 2000; ++i) {
        rng::TrialRng r(99, i);
        const double gf = 100.0 * r.next_unit() / r.next_unit();
        const double gr = 100.0 * r.next_unit() / r.next_unit();
        const double ad = linkmodel::end_to_end_snr(AdaptiveGain{}, gf, gr);
        const double fx = linkmodel::end_to_end_snr(FixedGain{1.3}, gf, gr);
        CHECK(ad <= std::min(gf, gr) + 1e-12);
        CHECK(fx <= gr * (1 + 1e-12));
        // monotone in each argument
        CHECK(linkmodel::end_to_end_snr(AdaptiveGain{}, gf * 1.1, gr) >= ad - 1e-12);
        CHECK(linkmodel::end_to_end_snr(FixedGain{1.3}, gf, gr * 1.1) >= fx - 1e-12);
    }
}

TEST_CASE("more users means stochastically larger selection") {
    RayleighRf rf(4.0);
    for (double g : {0.5, 2.0, 4.0, 10.0}) {
        double prev = 1.0;
        for (int n = 1; n <= 6; ++n) {
            const double v = linkmodel::best_user_cdf(rf, n, g);
            CHECK(v <= prev + 1e-15);
            prev = v;
        }
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(linkmodel::binomial(5, 2) == 10.0);
    CHECK(linkmodel::binomial(64, 32) == 1832624140942590534.0);
    CHECK(linkmodel::binomial(10, 0) == 1.0);
    CHECK(linkmodel::binomial(10, 11) == 0.0);
    CHECK(linkmodel::binomial(100, 3) == doctest::Approx(161700.0).epsilon(1e-12));
}

TEST_CASE("system config validation") {
    linkmodel::SystemConfig cfg{2, RayleighRf(10.0),
                                {channels::NegExpTurbulence(1.0), 10.0},
                                1.0, FixedGain{1.0}, 10.0};
    CHECK_NOTHROW(cfg.validate());
    cfg.n_users = 0;
    CHECK_THROWS_AS(cfg.validate(), domain_error);
    cfg.n_users = 2;
    cfg.relay = FixedGain{0.0};
    CHECK_THROWS_AS(cfg.validate(), domain_error);
}

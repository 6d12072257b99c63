#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "linklab/linklab.h"

namespace {

struct ConfigGuard {
    ll_config* cfg = ll_config_create();
    ~ConfigGuard() { ll_config_free(cfg); }
};

}  // namespace

TEST_CASE("version and error plumbing") {
    CHECK(std::strlen(ll_version()) > 0);
    double out = 0.0;
    CHECK(ll_log_gamma(4.2, &out) == LL_OK);
    CHECK(std::abs(out - 2.048555636960589809021) < 1e-13);
    CHECK(ll_log_gamma(-1.0, &out) == LL_ERR_DOMAIN);
    CHECK(std::strlen(ll_last_error()) > 0);
    CHECK(ll_log_gamma(1.0, nullptr) == LL_ERR_INVALID);
}

TEST_CASE("meijer evaluation through the C surface") {
    const double b[] = {0.0};
    ll_meijer_spec spec{1, 0, nullptr, b, 0, 1, 1.0};
    double out = 0.0;
    CHECK(ll_meijer_g(&spec, &out) == LL_OK);
    CHECK(std::abs(out - std::exp(-1.0)) < 1e-12);
    spec.z = -1.0;
    CHECK(ll_meijer_g(&spec, &out) == LL_ERR_DOMAIN);
}

TEST_CASE("config handles and metric evaluation") {
    ConfigGuard g;
    REQUIRE(g.cfg);
    CHECK(ll_config_set_users(g.cfg, 2) == LL_OK);
    CHECK(ll_config_set_users(g.cfg, 0) == LL_ERR_DOMAIN);
    CHECK(ll_config_set_mean_snr_db(g.cfg, 25.0, 25.0) == LL_OK);
    CHECK(ll_config_set_negexp(g.cfg, 1.0) == LL_OK);
    CHECK(ll_config_set_relay_fixed(g.cfg, 1.0) == LL_OK);
    CHECK(ll_config_set_gamma_th_db(g.cfg, 10.0) == LL_OK);

    double closed = 0.0, quad = 0.0;
    CHECK(ll_outage(g.cfg, LL_METHOD_CLOSED_FORM, &closed) == LL_OK);
    CHECK(ll_outage(g.cfg, LL_METHOD_QUADRATURE, &quad) == LL_OK);
    CHECK(std::abs(closed - quad) < 1e-6);
    CHECK(closed > 0.0);
    CHECK(closed < 1.0);

    double ber = 0.0;
    CHECK(ll_ber(g.cfg, LL_METHOD_CLOSED_FORM, &ber) == LL_OK);
    CHECK(ber > 0.0);
    CHECK(ber <= 0.5);

    // channel laws at the C surface (NegExp with unit lambda, 25 dB scale)
    double cdf = 0.0;
    CHECK(ll_channel_cdf(g.cfg, LL_LINK_FSO, std::pow(10.0, 2.5), &cdf) == LL_OK);
    CHECK(std::abs(cdf - (1.0 - std::exp(-1.0))) < 1e-12);
    double pdf = 0.0;
    CHECK(ll_channel_pdf(g.cfg, LL_LINK_RF, 0.0, &pdf) == LL_OK);
    CHECK(std::abs(pdf - std::pow(10.0, -2.5)) < 1e-14);
}

TEST_CASE("Monte Carlo via the C surface is deterministic") {
    ConfigGuard g;
    ll_config_set_negexp(g.cfg, 1.0);
    ll_config_set_relay_adaptive(g.cfg);
    ll_config_set_mean_snr_db(g.cfg, 20.0, 20.0);
    ll_mc_options opts{100'000, 7, 8192, LL_COMBINING_EXACT, 1};
    ll_mc_estimate a{}, b{};
    CHECK(ll_mc_outage(g.cfg, &opts, &a) == LL_OK);
    opts.workers = 8;
    CHECK(ll_mc_outage(g.cfg, &opts, &b) == LL_OK);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    opts.combining = LL_COMBINING_MIN_APPROX;
    ll_mc_estimate c{};
    CHECK(ll_mc_outage(g.cfg, &opts, &c) == LL_OK);
    CHECK(c.estimate <= a.estimate);  // min approximation is optimistic
    ll_mc_estimate ber{};
    CHECK(ll_mc_ber(g.cfg, &opts, &ber) == LL_OK);
    CHECK(ber.estimate > 0.0);
    CHECK(ber.estimate < 0.5);
}

TEST_CASE("sweep handles: parse, canonical, run, CSV") {
    const char* text = R"({
        "regime": "negexp",
        "relay": "fixed",
        "n_users": 2,
        "gamma_grid_db": [20, 30],
        "methods": ["closed"]
    })";
    ll_sweep* sweep = ll_sweep_parse(text);
    REQUIRE(sweep);

    size_t len = 0;
    CHECK(ll_sweep_canonical(sweep, nullptr, &len) == LL_OK);
    REQUIRE(len > 2);
    std::string canon(len, '\0');
    CHECK(ll_sweep_canonical(sweep, canon.data(), &len) == LL_OK);
    CHECK(canon.find("\"negexp\"") != std::string::npos);

    ll_curves* curves = ll_sweep_run(sweep, nullptr);
    REQUIRE(curves);
    CHECK(ll_curves_row_count(curves) == 2);
    CHECK(ll_curves_error_count(curves) == 0);
    ll_point pt{};
    CHECK(ll_curves_row(curves, 0, &pt) == LL_OK);
    CHECK(pt.gamma_avg_db == 20.0);
    CHECK(std::string(pt.metric_kind) == "outage");
    CHECK(std::string(pt.relay) == "fixed");
    CHECK(std::string(pt.regime) == "negexp-l1");
    CHECK(ll_curves_row(curves, 2, &pt) == LL_ERR_INVALID);

    const char* csv = "/tmp/linklab_capi_test.csv";
    CHECK(ll_curves_write_csv(curves, csv) == LL_OK);
    std::FILE* f = std::fopen(csv, "r");
    REQUIRE(f);
    char header[128] = {};
    REQUIRE(std::fgets(header, sizeof header, f));
    std::fclose(f);
    std::remove(csv);
    CHECK(std::string(header) ==
          "gamma_avg_db,metric,metric_kind,method,ci_half_width,n_users,regime,relay\n");

    ll_curves_free(curves);
    ll_sweep_free(sweep);

    CHECK(ll_sweep_parse("{\"nope\":1}") == nullptr);
    CHECK(std::strlen(ll_last_error()) > 0);
    CHECK(ll_sweep_preset("fig99") == nullptr);
    ll_sweep* preset = ll_sweep_preset("fig6");
    REQUIRE(preset);
    ll_sweep_free(preset);
}

TEST_CASE("errata registry via the C surface") {
    CHECK(ll_errata_set_path("/tmp/linklab_capi_errata.log") == LL_OK);
    size_t len = 0;
    CHECK(ll_errata_text(nullptr, &len) == LL_OK);
    REQUIRE(len > 0);
    std::string text(len, '\0');
    CHECK(ll_errata_text(text.data(), &len) == LL_OK);
    CHECK(text.find("equation=eq29") != std::string::npos);
    std::remove("/tmp/linklab_capi_errata.log");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "analytic.hpp"
#include "errors.hpp"
#include "sweep.hpp"

using namespace linklab;
using analytic::Method;
using analytic::MetricKind;
using sweep::SweepSpec;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("minimal config gets the documented defaults") {
    const auto s = sweep::parse_config(R"({"regime":"moderate-gg","relay":"fixed","n_users":2})");
    CHECK(s.metric == MetricKind::Outage);
    CHECK(s.relays == std::vector{sweep::RelayKind::Fixed});
    CHECK(s.n_users == 2);
    CHECK(s.c == 1.0);
    CHECK(s.gamma_th_db == 10.0);
    CHECK(s.eta == 1.0);
    CHECK(s.gamma_grid_db.size() == 46);
    CHECK(s.methods == std::vector{Method::ClosedForm});
    CHECK(s.regime.kind == sweep::Regime::Kind::ModerateGg);
}

TEST_CASE("validation errors name the key and line") {
    const std::string bad = "{\n  \"regime\": \"moderate-gg\",\n  \"n_users\": 0\n}";
    try {
        sweep::parse_config(bad);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.key == "n_users");
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("n_users") != std::string::npos);
    }
    CHECK_THROWS_AS(sweep::parse_config(R"({"regime":"moderate-gg","frobnicate":1})"), parse_error);
    CHECK_THROWS_AS(sweep::parse_config(R"({"relay":"fixed"})"), parse_error);  // missing regime
    CHECK_THROWS_AS(sweep::parse_config(R"({"regime":"warp"})"), parse_error);
    CHECK_THROWS_AS(sweep::parse_config(R"({"regime":"negexp","lambda":-1})"), parse_error);
    CHECK_THROWS_AS(sweep::parse_config("{nope"), parse_error);
    CHECK_THROWS_AS(
        sweep::parse_config(R"({"regime":"moderate-gg","sweep":{"variable":"lambda","values":[1,5]}})"),
        parse_error);  // lambda sweep needs negexp
}

TEST_CASE("canonical form round-trips every preset") {
    for (const auto& name : sweep::preset_names()) {
        const auto spec = sweep::preset(name);
        const auto again = sweep::parse_config(sweep::canonical_config(spec));
        CHECK(again == spec);
    }
    // custom Gamma-Gamma regime with kappa override
    SweepSpec custom = sweep::preset("fig2");
    custom.variable = sweep::SweepVariable::GammaAvgDb;
    custom.regime_values.clear();
    custom.regime = {sweep::Regime::Kind::CustomGg, 3.1, 2.2, 4.4, 0.7, 1.0};
    CHECK(sweep::parse_config(sweep::canonical_config(custom)) == custom);
}

TEST_CASE("single-point sweep equals the direct analytic value") {
    SweepSpec s;
    s.regime = sweep::Regime::named("negexp");
    s.relays = {sweep::RelayKind::Fixed};
    s.gamma_grid_db = {30.0};
    const auto curves = sweep::run_sweep(s);
    REQUIRE(curves.size() == 1);
    REQUIRE(curves[0].points.size() == 1);
    const double g = channels::db_to_linear(30.0);
    linkmodel::SystemConfig cfg{2, channels::RayleighRf(g),
                                {channels::NegExpTurbulence(1.0), g}, 1.0,
                                linkmodel::FixedGain{1.0}, channels::db_to_linear(10.0)};
    CHECK(curves[0].points[0].metric == analytic::outage_fixed_ne(cfg));
    CHECK(curves[0].points[0].ci_half_width == 0.0);
}

TEST_CASE("CSV: header, ordering, idempotent round-trip") {
    const char* path = "/tmp/linklab_test_sweep.csv";
    sweep::emit_csv({}, path);
    CHECK(slurp(path) == "gamma_avg_db,metric,metric_kind,method,ci_half_width,n_users,regime,relay\n");

    SweepSpec s = sweep::preset("fig4");
    s.gamma_grid_db = {10.0, 20.0, 30.0};
    const auto curves = sweep::run_sweep(s);
    sweep::emit_csv(curves, path);
    const std::string first = slurp(path);
    const auto readback = sweep::read_csv(path);
    sweep::emit_csv(readback, path);
    CHECK(slurp(path) == first);  // parse -> print is a fixpoint at 12 digits
    // rows sorted by the sweep coordinate within a curve
    for (const auto& c : readback) {
        for (size_t i = 0; i + 1 < c.points.size(); ++i)
            CHECK(c.points[i].gamma_avg_db < c.points[i + 1].gamma_avg_db);
    }
    std::remove(path);
}

TEST_CASE("identical specs with Monte Carlo produce identical bytes") {
    SweepSpec s = sweep::preset("fig5");
    s.gamma_grid_db = {15.0, 25.0};
    s.methods = {Method::MonteCarlo};
    s.mc.trials = 50'000;
    s.mc.seed = 99;
    sweep::RunOptions one;
    one.workers = 1;
    sweep::RunOptions eight;
    eight.workers = 8;
    const char* pa = "/tmp/linklab_mc_a.csv";
    const char* pb = "/tmp/linklab_mc_b.csv";
    sweep::emit_csv(sweep::run_sweep(s, one), pa);
    sweep::emit_csv(sweep::run_sweep(s, eight), pb);
    CHECK(slurp(pa) == slurp(pb));
    std::remove(pa);
    std::remove(pb);
}

TEST_CASE("failures at grid points are annotated and do not kill the sweep") {
    SweepSpec s;
    s.regime = sweep::Regime::named("negexp");
    s.relays = {sweep::RelayKind::Fixed};
    s.metric = MetricKind::Ber;
    // -120 dB drives the residue series past its term cap; 30 dB is fine
    s.gamma_grid_db = {-120.0, 30.0};
    const auto curves = sweep::run_sweep(s);
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].points.size() == 1);
    CHECK(curves[0].points[0].gamma_avg_db == 30.0);
    REQUIRE(curves[0].errors.size() == 1);
    CHECK(curves[0].errors[0].find("-120") != std::string::npos);
}

TEST_CASE("level crossing reads gaps the way log-scale figures do") {
    sweep::PerformanceCurve c;
    for (double g = 0.0; g <= 40.0; g += 1.0)
        c.points.push_back({g, std::pow(10.0, -g / 10.0), MetricKind::Outage,
                            Method::ClosedForm, 0.0});
    CHECK(sweep::level_crossing_db(c, 1e-2) == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(sweep::level_crossing_db(c, 3.16e-3) == doctest::Approx(25.0).epsilon(1e-3));
    CHECK(std::isnan(sweep::level_crossing_db(c, 1e-9)));
}

TEST_CASE("preset shapes match the figure parameterization") {
    const auto fig2 = sweep::preset("fig2");
    CHECK(fig2.metric == MetricKind::Outage);
    CHECK(fig2.regime_values.size() == 2);
    CHECK(fig2.relays.size() == 2);
    CHECK(fig2.n_users == 2);
    const auto fig5 = sweep::preset("fig5");
    CHECK(fig5.variable == sweep::SweepVariable::NUsers);
    CHECK(fig5.values == std::vector<double>{1, 2, 4});
    const auto fig8 = sweep::preset("fig8");
    CHECK(fig8.metric == MetricKind::Ber);
    CHECK_THROWS_AS(sweep::preset("fig9"), parse_error);
    // every preset runs end-to-end on a reduced grid without errors
    for (const auto& name : sweep::preset_names()) {
        auto s = sweep::preset(name);
        s.gamma_grid_db = {20.0, 35.0};
        const auto curves = sweep::run_sweep(s);
        CHECK(!curves.empty());
        for (const auto& c : curves) {
            CHECK(c.errors.empty());
            CHECK(c.points.size() == 2);
        }
    }
}

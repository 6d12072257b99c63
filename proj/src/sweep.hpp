#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "analytic.hpp"
#include "mcsim.hpp"

namespace linklab::sweep {

enum class SweepVariable { GammaAvgDb, NUsers, Lambda, Regime };
enum class RelayKind { Fixed, Adaptive };

// Turbulence description as named at the tool surface.
struct Regime {
    enum class Kind { ModerateGg, StrongGg, CustomGg, NegExp };
    Kind kind = Kind::ModerateGg;
    double alpha = 4.0, beta = 1.9, xi = 10.45;  // Gamma-Gamma parameters
    double kappa = -1.0;                          // <0: derived from xi
    double lambda = 1.0;                          // NegExp parameter

    bool operator==(const Regime&) const = default;
    bool is_gg() const { return kind != Kind::NegExp; }
    std::string tag() const;  // CSV regime column (no commas)
    channels::TurbulenceModel model(double mean_snr) const;
    static Regime named(const std::string& name);  // moderate-gg | strong-gg | negexp
};

struct McSettings {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    std::uint32_t chunk_size = 65'536;
    mcsim::CombiningMode combining = mcsim::CombiningMode::Exact;
    bool operator==(const McSettings&) const = default;
};

struct SweepSpec {
    analytic::MetricKind metric = analytic::MetricKind::Outage;
    std::vector<RelayKind> relays = {RelayKind::Fixed, RelayKind::Adaptive};
    int n_users = 2;
    double c = 1.0;
    double gamma_th_db = 10.0;
    double eta = 1.0;
    Regime regime;
    SweepVariable variable = SweepVariable::GammaAvgDb;
    std::vector<double> values;          // family values for NUsers / Lambda
    std::vector<Regime> regime_values;   // family values for Regime
    std::vector<double> gamma_grid_db;   // x-axis; defaults to 0..45 in 1 dB steps
    std::vector<analytic::Method> methods = {analytic::Method::ClosedForm};
    McSettings mc;
    bool trusted = false;

    bool operator==(const SweepSpec&) const = default;
};

// JSON config document -> validated spec. Throws parse_error naming the
// offending key and (when locatable) its line.
SweepSpec parse_config(const std::string& text);
SweepSpec parse_config_file(const std::string& path);

// Canonical JSON form; parse_config(canonical_config(s)) == s.
std::string canonical_config(const SweepSpec& spec);

// 0..45 dB in 1 dB steps (the preset grid).
std::vector<double> default_gamma_grid();

// Built-in figure-reproduction specs: fig2 .. fig8.
SweepSpec preset(const std::string& name);
std::vector<std::string> preset_names();

struct PerformancePoint {
    double gamma_avg_db = 0.0;
    double metric = 0.0;
    analytic::MetricKind kind = analytic::MetricKind::Outage;
    analytic::Method method = analytic::Method::ClosedForm;
    double ci_half_width = 0.0;  // 1.96 * MC standard error; 0 for deterministic
};

struct PerformanceCurve {
    std::string regime;
    std::string relay;  // "fixed" | "adaptive"
    int n_users = 1;
    analytic::Method method = analytic::Method::ClosedForm;
    analytic::MetricKind kind = analytic::MetricKind::Outage;
    std::vector<PerformancePoint> points;          // sorted by gamma_avg_db
    std::vector<std::string> errors;               // failed grid points, annotated
};

struct RunOptions {
    std::optional<std::vector<analytic::Method>> methods;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<bool> trusted;
    int workers = 0;  // Monte Carlo workers; determinism does not depend on it
};

std::vector<PerformanceCurve> run_sweep(const SweepSpec& spec, const RunOptions& opts = {});

// One CSV file per curve set, fixed header, 12 significant digits, rows
// sorted by the sweep coordinate.
void emit_csv(const std::vector<PerformanceCurve>& curves, const std::string& path);
std::vector<PerformanceCurve> read_csv(const std::string& path);

// dB abscissa where the curve reaches `level` (piecewise-linear in
// (dB, log10 metric) space); NaN when the level is not bracketed.
double level_crossing_db(const PerformanceCurve& curve, double level);

const char* method_name(analytic::Method m);
const char* metric_name(analytic::MetricKind k);

}  // namespace linklab::sweep

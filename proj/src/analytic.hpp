#pragma once

#include <functional>
#include <string>

#include "linkmodel.hpp"

namespace linklab::analytic {

enum class MetricKind { Outage, Ber };
enum class Method { ClosedForm, Quadrature, MonteCarlo };

// Closed forms. Each requires the matching relay/turbulence combination and
// returns a probability clamped to its natural range.
double outage_fixed_gg(const linkmodel::SystemConfig& cfg);
double outage_fixed_ne(const linkmodel::SystemConfig& cfg);
double outage_adaptive(const linkmodel::SystemConfig& cfg);  // both turbulence models
double ber_fixed_gg(const linkmodel::SystemConfig& cfg);
double ber_fixed_ne(const linkmodel::SystemConfig& cfg);
double ber_adaptive_gg(const linkmodel::SystemConfig& cfg);
double ber_adaptive_ne(const linkmodel::SystemConfig& cfg);

// Dispatch on cfg.relay / cfg.fso.
double closed_form(const linkmodel::SystemConfig& cfg, MetricKind metric);
double quadrature(const linkmodel::SystemConfig& cfg, MetricKind metric);

// Direct numeric oracles (no Meijer-G transform identities involved).
double outage_quadrature(const linkmodel::SystemConfig& cfg);
double ber_quadrature(const linkmodel::SystemConfig& cfg);

// Generic DPSK average 0.5 * Integral_0^inf e^{-g} F(g) dg for an arbitrary
// threshold->outage function; used by tests and by the cfg-driven path.
double ber_quadrature_of(const std::function<double(double)>& outage_fn);

struct CheckedValue {
    double closed;
    double oracle;
    double gap;
    bool erratum;  // gap exceeded 1e-6 and was logged
    double value;  // closed, or oracle when trusted && erratum
};

// Cross-checks the closed form against the quadrature oracle; records an
// errata entry when they disagree beyond 1e-6 absolute.
CheckedValue evaluate_checked(const linkmodel::SystemConfig& cfg, MetricKind metric,
                              bool trusted);

std::string equation_id(const linkmodel::SystemConfig& cfg, MetricKind metric);
std::string fingerprint(const linkmodel::SystemConfig& cfg, MetricKind metric);

// Records the documented discrepancies of the printed closed forms
// (with fresh numeric comparisons) into the errata registry.
void record_standing_errata();

}  // namespace linklab::analytic

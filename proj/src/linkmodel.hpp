#pragma once

#include <variant>

#include "channels.hpp"

namespace linklab::linkmodel {

struct FixedGain {
    double c = 1.0;  // relay gain constant, G^2 = 1/(C sigma^2)
};
struct AdaptiveGain {};

using RelayScheme = std::variant<FixedGain, AdaptiveGain>;

// Full scenario: N users on the RF hop, one FSO hop, relay scheme, outage
// threshold. eta is carried for calibration bookkeeping only; it enters the
// model through the FSO mean SNR.
struct SystemConfig {
    int n_users = 1;
    channels::RayleighRf rf;
    channels::TurbulenceModel fso;
    double eta = 1.0;
    RelayScheme relay;
    double gamma_th = 0.0;  // linear

    void validate() const;  // throws domain_error
    bool fixed_gain() const { return std::holds_alternative<FixedGain>(relay); }
    double gain_constant() const { return std::get<FixedGain>(relay).c; }
};

// Best-of-N selection CDF, (1 - e^{-gamma/mean})^n.
double best_user_cdf(const channels::RayleighRf& rf, int n, double gamma);

// Selection pdf in product form, n F^{n-1} f.
double best_user_pdf(const channels::RayleighRf& rf, int n, double gamma);

// Same pdf through the alternating binomial expansion (compensated sum);
// agrees with best_user_pdf to machine precision.
double best_user_pdf_expansion(const channels::RayleighRf& rf, int n, double gamma);

// Per-realization end-to-end SNR: fixed gain gf*gr/(gf + C), adaptive
// gf*gr/(gf + gr + 1).
double end_to_end_snr(const RelayScheme& relay, double gamma_fso, double gamma_rf);

// min(gamma_fso, gamma_rf) upper bound used by the adaptive-gain analysis.
double end_to_end_snr_min_approx(double gamma_fso, double gamma_rf);

// Exact binomial coefficient for n <= 64, log-gamma based beyond.
double binomial(int n, int k);

}  // namespace linklab::linkmodel

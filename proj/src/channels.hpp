#pragma once

#include <utility>
#include <variant>

#include "rng.hpp"

namespace linklab::channels {

// Gamma-Gamma scintillation with pointing errors. xi is the ratio between
// equivalent beam radius and twice the jitter standard deviation; kappa is
// the SNR-argument constant, xi^2/(1+xi^2) unless explicitly overridden.
struct GammaGammaPointing {
    double alpha;
    double beta;
    double xi;
    double kappa;

    GammaGammaPointing(double alpha_, double beta_, double xi_);
    GammaGammaPointing(double alpha_, double beta_, double xi_, double kappa_);
};

// Saturated-regime turbulence. Note: the mean-SNR field of TurbulenceModel
// acts as the scale parameter of the distribution, E[gamma] = 2*mean/lambda^2,
// not as the mean SNR itself.
struct NegExpTurbulence {
    double lambda;
    explicit NegExpTurbulence(double lambda_);
};

struct RayleighRf {
    double mean_snr;  // linear
    explicit RayleighRf(double mean_snr_);
};

struct TurbulenceModel {
    std::variant<GammaGammaPointing, NegExpTurbulence> fading;
    double mean_snr;  // linear scale parameter of the SNR distribution

    TurbulenceModel(GammaGammaPointing gg, double mean_snr_);
    TurbulenceModel(NegExpTurbulence ne, double mean_snr_);
    bool is_gg() const { return std::holds_alternative<GammaGammaPointing>(fading); }
};

double pdf_snr(const TurbulenceModel& model, double gamma);
double cdf_snr(const TurbulenceModel& model, double gamma);
double pdf_snr(const RayleighRf& model, double gamma);
double cdf_snr(const RayleighRf& model, double gamma);

// Draws one SNR realization consistent with cdf_snr.
double sample_snr(const TurbulenceModel& model, rng::TrialRng& rng);
double sample_snr(const RayleighRf& model, rng::TrialRng& rng);

// (alpha, beta) from the Rytov variance, exactly as in the source model
// (no 7/6 / 5/6 exponents; see the errata log).
std::pair<double, double> rytov_to_gg_params(double rytov_var);

// xi = beam_radius_eq / (2 * jitter_std)
double pointing_xi(double beam_radius_eq, double jitter_std);

double db_to_linear(double db);
double linear_to_db(double x);

}  // namespace linklab::channels

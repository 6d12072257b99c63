#include "channels.hpp"

#include <cmath>

#include "errors.hpp"
#include "specfun.hpp"

namespace linklab::channels {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw domain_error(std::string(what) + " must be positive");
}

void require_nonneg_gamma(double gamma) {
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw domain_error("SNR argument must be non-negative and finite");
}

// Beyond this Meijer argument the CDF complement is < 1e-30; evaluating the
// series there would only burn precision on a value that is 1 in doubles.
constexpr double kCdfArgClamp = 1500.0;

double gg_argument(const GammaGammaPointing& gg, double gamma, double mean_snr) {
    return gg.alpha * gg.beta * gg.kappa * std::sqrt(gamma / mean_snr);
}

double gg_norm(const GammaGammaPointing& gg) {
    // xi^2 / (Gamma(alpha) Gamma(beta))
    return gg.xi * gg.xi *
           std::exp(-specfun::log_gamma(gg.alpha) - specfun::log_gamma(gg.beta));
}

}  // namespace

GammaGammaPointing::GammaGammaPointing(double alpha_, double beta_, double xi_)
    : GammaGammaPointing(alpha_, beta_, xi_, xi_ * xi_ / (1.0 + xi_ * xi_)) {}

GammaGammaPointing::GammaGammaPointing(double alpha_, double beta_, double xi_, double kappa_)
    : alpha(alpha_), beta(beta_), xi(xi_), kappa(kappa_) {
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    require_positive(xi, "xi");
    require_positive(kappa, "kappa");
}

NegExpTurbulence::NegExpTurbulence(double lambda_) : lambda(lambda_) {
    require_positive(lambda, "lambda");
}

RayleighRf::RayleighRf(double mean_snr_) : mean_snr(mean_snr_) {
    require_positive(mean_snr, "mean SNR");
}

TurbulenceModel::TurbulenceModel(GammaGammaPointing gg, double mean_snr_)
    : fading(gg), mean_snr(mean_snr_) {
    require_positive(mean_snr, "mean SNR");
}

TurbulenceModel::TurbulenceModel(NegExpTurbulence ne, double mean_snr_)
    : fading(ne), mean_snr(mean_snr_) {
    require_positive(mean_snr, "mean SNR");
}

double pdf_snr(const TurbulenceModel& model, double gamma) {
    require_nonneg_gamma(gamma);
    if (const auto* ne = std::get_if<NegExpTurbulence>(&model.fading)) {
        if (gamma == 0.0) return HUGE_VAL;  // integrable 1/sqrt(gamma) edge
        const double r = std::sqrt(gamma / model.mean_snr);
        return ne->lambda / (2.0 * std::sqrt(gamma * model.mean_snr)) * std::exp(-ne->lambda * r);
    }
    const auto& gg = std::get<GammaGammaPointing>(model.fading);
    const double z = gg_argument(gg, gamma, model.mean_snr);
    if (gamma == 0.0 || z == 0.0) {
        const double lead = std::min(std::min(gg.xi * gg.xi, gg.alpha), gg.beta);
        return lead > 2.0 ? 0.0 : HUGE_VAL;
    }
    if (z > kCdfArgClamp) return 0.0;
    const double g = specfun::meijer_g(
        {3, 0, {gg.xi * gg.xi + 1.0}, {gg.xi * gg.xi, gg.alpha, gg.beta}, z});
    return std::max(0.0, gg_norm(gg) / (2.0 * gamma) * g);
}

double cdf_snr(const TurbulenceModel& model, double gamma) {
    require_nonneg_gamma(gamma);
    if (gamma == 0.0) return 0.0;
    if (const auto* ne = std::get_if<NegExpTurbulence>(&model.fading)) {
        return -std::expm1(-ne->lambda * std::sqrt(gamma / model.mean_snr));
    }
    const auto& gg = std::get<GammaGammaPointing>(model.fading);
    const double z = gg_argument(gg, gamma, model.mean_snr);
    if (z > kCdfArgClamp) return 1.0;
    const double x2 = gg.xi * gg.xi;
    const double g = specfun::meijer_g(
        {3, 1, {1.0, x2 + 1.0}, {x2, gg.alpha, gg.beta, 0.0}, z});
    const double f = gg_norm(gg) * g;
    return std::min(1.0, std::max(0.0, f));
}

double pdf_snr(const RayleighRf& model, double gamma) {
    require_nonneg_gamma(gamma);
    return std::exp(-gamma / model.mean_snr) / model.mean_snr;
}

double cdf_snr(const RayleighRf& model, double gamma) {
    require_nonneg_gamma(gamma);
    return -std::expm1(-gamma / model.mean_snr);
}

double sample_snr(const TurbulenceModel& model, rng::TrialRng& rng) {
    if (const auto* ne = std::get_if<NegExpTurbulence>(&model.fading)) {
        const double e = rng.exponential();
        const double r = e / ne->lambda;
        return model.mean_snr * r * r;
    }
    const auto& gg = std::get<GammaGammaPointing>(model.fading);
    const double x = rng.gamma(gg.alpha) / gg.alpha;  // unit-mean large-scale
    const double y = rng.gamma(gg.beta) / gg.beta;    // unit-mean small-scale
    const double v = std::exp(std::log(rng.next_unit()) / (gg.xi * gg.xi));
    const double u = x * y * v / gg.kappa;
    return model.mean_snr * u * u;
}

double sample_snr(const RayleighRf& model, rng::TrialRng& rng) {
    return -model.mean_snr * std::log1p(-rng.next_unit());
}

std::pair<double, double> rytov_to_gg_params(double rytov_var) {
    require_positive(rytov_var, "Rytov variance");
    const double s = rytov_var;
    const double s125 = std::pow(s, 1.2);  // sigma_R^{12/5}
    const double alpha = 1.0 / std::expm1(0.49 * s / (1.0 + 1.11 * s125));
    const double beta = 1.0 / std::expm1(0.51 * s / (1.0 + 0.69 * s125));
    return {alpha, beta};
}

double pointing_xi(double beam_radius_eq, double jitter_std) {
    require_positive(beam_radius_eq, "equivalent beam radius");
    require_positive(jitter_std, "jitter standard deviation");
    return beam_radius_eq / (2.0 * jitter_std);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace linklab::channels

#include "linkmodel.hpp"

#include <cmath>

#include "errors.hpp"
#include "specfun.hpp"

namespace linklab::linkmodel {

namespace {
void require_nonneg(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw domain_error(std::string(what) + " must be non-negative and finite");
}
}  // namespace

void SystemConfig::validate() const {
    if (n_users < 1) throw domain_error("n_users must be >= 1");
    if (!(eta > 0.0) || !std::isfinite(eta)) throw domain_error("eta must be positive");
    if (!(gamma_th >= 0.0) || !std::isfinite(gamma_th))
        throw domain_error("gamma_th must be non-negative");
    if (fixed_gain() && !(gain_constant() > 0.0))
        throw domain_error("fixed-gain constant C must be positive");
}

double best_user_cdf(const channels::RayleighRf& rf, int n, double gamma) {
    if (n < 1) throw domain_error("best_user_cdf: n must be >= 1");
    require_nonneg(gamma, "gamma");
    const double single = -std::expm1(-gamma / rf.mean_snr);
    return std::pow(single, n);
}

double best_user_pdf(const channels::RayleighRf& rf, int n, double gamma) {
    if (n < 1) throw domain_error("best_user_pdf: n must be >= 1");
    require_nonneg(gamma, "gamma");
    const double single_cdf = -std::expm1(-gamma / rf.mean_snr);
    const double single_pdf = std::exp(-gamma / rf.mean_snr) / rf.mean_snr;
    return n * std::pow(single_cdf, n - 1) * single_pdf;
}

double best_user_pdf_expansion(const channels::RayleighRf& rf, int n, double gamma) {
    if (n < 1) throw domain_error("best_user_pdf_expansion: n must be >= 1");
    require_nonneg(gamma, "gamma");
    // N/mean * sum_k C(N-1,k) (-1)^k e^{-(k+1) gamma/mean}, Kahan-compensated
    double sum = 0.0, comp = 0.0;
    for (int k = 0; k < n; ++k) {
        const double term = binomial(n - 1, k) * ((k % 2) ? -1.0 : 1.0) *
                            std::exp(-(k + 1) * gamma / rf.mean_snr);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return n / rf.mean_snr * sum;
}

double end_to_end_snr(const RelayScheme& relay, double gamma_fso, double gamma_rf) {
    require_nonneg(gamma_fso, "gamma_fso");
    require_nonneg(gamma_rf, "gamma_rf");
    if (const auto* fixed = std::get_if<FixedGain>(&relay))
        return gamma_fso * gamma_rf / (gamma_fso + fixed->c);
    return gamma_fso * gamma_rf / (gamma_fso + gamma_rf + 1.0);
}

double end_to_end_snr_min_approx(double gamma_fso, double gamma_rf) {
    require_nonneg(gamma_fso, "gamma_fso");
    require_nonneg(gamma_rf, "gamma_rf");
    return std::min(gamma_fso, gamma_rf);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= 64) {
        // exact integer recurrence; C(64,32) still fits in 64 bits
        unsigned long long r = 1;
        const int kk = std::min(k, n - k);
        for (int i = 1; i <= kk; ++i) r = r * (n - kk + i) / i;
        return static_cast<double>(r);
    }
    return std::round(std::exp(specfun::log_gamma(n + 1.0) - specfun::log_gamma(k + 1.0) -
                               specfun::log_gamma(n - k + 1.0)));
}

}  // namespace linklab::linkmodel

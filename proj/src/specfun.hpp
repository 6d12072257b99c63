#pragma once

#include <vector>

namespace linklab::specfun {

// G^{m,n}_{p,q}(z | a_1..a_p ; b_1..b_q) with real parameters and z > 0.
// m counts the Gamma(b_j - s) factors, n the Gamma(1 - a_j + s) factors.
struct MeijerGSpec {
    int m = 0;
    int n = 0;
    std::vector<double> a;
    std::vector<double> b;
    double z = 0.0;

    int p() const { return static_cast<int>(a.size()); }
    int q() const { return static_cast<int>(b.size()); }

    // Throws domain_error on a malformed spec (m/n out of range, z <= 0,
    // non-finite parameters, or a_i - b_j a positive integer for i<=n, j<=m).
    void validate() const;
};

struct MeijerGOptions {
    double rel_tol = 1e-12;         // series truncation target
    double pole_shift = 1e-10;      // base epsilon for coincident-pole separation
    int max_terms_per_pole = 10000; // hard cap; exceeding it is an error
    bool extrapolate_shift = true;  // return the eps/eps-2 Richardson value
    bool shift_all_poles = false;   // force-shift every pole family (stability tests)
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Residue-series evaluation (reciprocal flip applied when p > q, or p == q
// with z > 1, or when no pole family is available unflipped). Throws
// unsupported_instance when no convergent strategy exists or a series
// exceeds the term cap; numeric_error when the pole-shift pair disagrees.
double meijer_g(const MeijerGSpec& spec, const MeijerGOptions& opts = {});

// L(a, s) = Integral_0^inf e^{-s t} e^{-2 a sqrt(t)} dt, a >= 0, s > 0.
// Equals (1/(sqrt(pi) s)) G^{2,1}_{1,2}(a^2/s | 0 ; 0, 1/2), evaluated in
// stable erfc form so that extreme a^2/s stays cheap.
double sqrt_exp_laplace(double a, double s);

}  // namespace linklab::specfun

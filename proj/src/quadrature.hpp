#pragma once

#include <functional>

namespace linklab::quadrature {

struct Result {
    double value;
    double abs_err;  // integrator's own error estimate
};

// Adaptive integration on [lo, hi] (Gauss-Kronrod subdivision; handles
// integrable endpoint singularities). Throws numeric_error when the
// integrator cannot meet the requested tolerances.
Result integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                        double epsabs = 1e-11, double epsrel = 1e-10);

// Adaptive integration on [lo, +inf).
Result integrate_upper(const std::function<double(double)>& f, double lo,
                       double epsabs = 1e-11, double epsrel = 1e-10);

// Fixed-order Gauss-Laguerre value of Integral_0^inf e^{-x} f(x) dx.
double gauss_laguerre(const std::function<double(double)>& f, int order);

}  // namespace linklab::quadrature

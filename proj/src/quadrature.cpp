#include "quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "errors.hpp"

namespace linklab::quadrature {

namespace {

std::once_flag g_handler_off;

void disable_gsl_abort() {
    std::call_once(g_handler_off, [] { gsl_set_error_handler_off(); });
}

double trampoline(double x, void* p) {
    return (*static_cast<const std::function<double(double)>*>(p))(x);
}

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

Result run(const std::function<double(double)>& f, double lo, double hi, bool upper,
           double epsabs, double epsrel) {
    disable_gsl_abort();
    constexpr size_t kLimit = 2000;
    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
        gsl_integration_workspace_alloc(kLimit));
    if (!ws) throw numeric_error("quadrature: workspace allocation failed");

    gsl_function gf;
    gf.function = &trampoline;
    gf.params = const_cast<std::function<double(double)>*>(&f);

    double value = 0.0, abserr = 0.0;
    int status;
    if (upper)
        status = gsl_integration_qagiu(&gf, lo, epsabs, epsrel, kLimit, ws.get(), &value, &abserr);
    else
        status = gsl_integration_qags(&gf, lo, hi, epsabs, epsrel, kLimit, ws.get(), &value, &abserr);

    // Roundoff-limited results are acceptable when the reported error is
    // within an order of the request; anything else is a real failure.
    const bool tolerable = abserr <= 10.0 * (epsabs + epsrel * std::abs(value));
    if (status != GSL_SUCCESS && !(status == GSL_EROUND && tolerable))
        throw numeric_error("quadrature: integrator failed (" +
                            std::string(gsl_strerror(status)) +
                            ", est. abs err " + std::to_string(abserr) + ")");
    return {value, abserr};
}

}  // namespace

Result integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                        double epsabs, double epsrel) {
    return run(f, lo, hi, false, epsabs, epsrel);
}

Result integrate_upper(const std::function<double(double)>& f, double lo, double epsabs,
                       double epsrel) {
    return run(f, lo, 0.0, true, epsabs, epsrel);
}

double gauss_laguerre(const std::function<double(double)>& f, int order) {
    disable_gsl_abort();
    gsl_integration_fixed_workspace* ws = gsl_integration_fixed_alloc(
        gsl_integration_fixed_laguerre, order, 0.0, 1.0, 0.0, 0.0);
    if (!ws) throw numeric_error("quadrature: Laguerre workspace allocation failed");
    gsl_function gf;
    gf.function = &trampoline;
    gf.params = const_cast<std::function<double(double)>*>(&f);
    double value = 0.0;
    const int status = gsl_integration_fixed(&gf, &value, ws);
    gsl_integration_fixed_free(ws);
    if (status != GSL_SUCCESS)
        throw numeric_error("quadrature: fixed-order rule failed");
    return value;
}

}  // namespace linklab::quadrature

#pragma once

#include <cstdint>
#include <functional>

#include "analytic.hpp"
#include "linkmodel.hpp"
#include "rng.hpp"

namespace linklab::mcsim {

enum class CombiningMode {
    Exact,      // per-realization relay SNR
    MinApprox,  // min(gamma_fso, gamma_rf), the adaptive-analysis approximation
};

struct McOptions {
    std::uint64_t trials = 1'000'000;
    std::uint64_t master_seed = 1;
    std::uint32_t chunk_size = 65'536;
    CombiningMode combining = CombiningMode::Exact;  // ignored for fixed gain
    int workers = 0;                                  // 0 = hardware concurrency
};

struct McEstimate {
    std::uint64_t trials = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t master_seed = 0;
    analytic::MetricKind metric = analytic::MetricKind::Outage;
};

// Per trial: draw N RF SNRs, keep the best, draw one FSO SNR, combine per the
// relay scheme, count gamma_end <= gamma_th. Bit-identical for a given
// (cfg, opts) regardless of worker count.
McEstimate run_outage_mc(const linkmodel::SystemConfig& cfg, const McOptions& opts);

// Semi-analytic DPSK estimator: averages the conditional error 0.5 e^{-gamma_end}.
McEstimate run_ber_mc(const linkmodel::SystemConfig& cfg, const McOptions& opts);

// Test hook: same engine with an injected end-to-end SNR generator.
McEstimate run_ber_mc_kernel(const std::function<double(rng::TrialRng&)>& snr_draw,
                             const McOptions& opts);
McEstimate run_outage_mc_kernel(const std::function<double(rng::TrialRng&)>& snr_draw,
                                double gamma_th, const McOptions& opts);

}  // namespace linklab::mcsim

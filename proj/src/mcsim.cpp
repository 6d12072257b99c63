#include "mcsim.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "errors.hpp"

namespace linklab::mcsim {

using linkmodel::SystemConfig;

namespace {

struct ChunkStats {
    std::uint64_t count = 0;  // outage counter
    double sum = 0.0;         // kernel sum (BER)
    double sum_sq = 0.0;
    double comp_sum = 0.0;    // Kahan carries
    double comp_sq = 0.0;

    void add_kernel(double v) {
        double y = v - comp_sum;
        double t = sum + y;
        comp_sum = (t - sum) - y;
        sum = t;
        const double v2 = v * v;
        y = v2 - comp_sq;
        t = sum_sq + y;
        comp_sq = (t - sum_sq) - y;
        sum_sq = t;
    }
};

void validate_opts(const McOptions& opts) {
    if (opts.trials < 1) throw domain_error("mc: trials must be >= 1");
    if (opts.chunk_size < 1) throw domain_error("mc: chunk_size must be >= 1");
}

// Runs chunks in parallel, merges them in chunk order so the result does not
// depend on the number of workers.
template <typename TrialFn>
std::vector<ChunkStats> run_chunks(std::uint64_t trials, std::uint32_t chunk_size,
                                   std::uint64_t seed, int workers, TrialFn&& per_trial) {
    const std::uint64_t n_chunks = (trials + chunk_size - 1) / chunk_size;
    std::vector<ChunkStats> stats(n_chunks);
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned n_workers =
        workers > 0 ? static_cast<unsigned>(workers) : std::min<std::uint64_t>(hw, n_chunks);

    auto work = [&](unsigned worker) {
        for (std::uint64_t c = worker; c < n_chunks; c += n_workers) {
            const std::uint64_t lo = c * chunk_size;
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk_size, trials);
            ChunkStats cs;
            for (std::uint64_t t = lo; t < hi; ++t) {
                rng::TrialRng rng(seed, t);
                per_trial(rng, cs);
            }
            stats[c] = cs;
        }
    };
    if (n_workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    return stats;
}

double draw_end_to_end(const SystemConfig& cfg, CombiningMode mode, rng::TrialRng& rng) {
    double best = 0.0;
    for (int i = 0; i < cfg.n_users; ++i)
        best = std::max(best, channels::sample_snr(cfg.rf, rng));
    const double gfso = channels::sample_snr(cfg.fso, rng);
    if (!cfg.fixed_gain() && mode == CombiningMode::MinApprox)
        return linkmodel::end_to_end_snr_min_approx(gfso, best);
    return linkmodel::end_to_end_snr(cfg.relay, gfso, best);
}

McEstimate finish_outage(const std::vector<ChunkStats>& stats, std::uint64_t trials,
                         std::uint64_t seed) {
    std::uint64_t count = 0;
    for (const auto& s : stats) count += s.count;
    const double p = static_cast<double>(count) / static_cast<double>(trials);
    return {trials, p, std::sqrt(std::max(0.0, p * (1.0 - p) / trials)), seed,
            analytic::MetricKind::Outage};
}

McEstimate finish_ber(const std::vector<ChunkStats>& stats, std::uint64_t trials,
                      std::uint64_t seed) {
    // ordered compensated merge across chunks
    double sum = 0.0, cs = 0.0, sum_sq = 0.0, cq = 0.0;
    for (const auto& s : stats) {
        double y = s.sum - cs;
        double t = sum + y;
        cs = (t - sum) - y;
        sum = t;
        y = s.sum_sq - cq;
        t = sum_sq + y;
        cq = (t - sum_sq) - y;
        sum_sq = t;
    }
    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    double var = 0.0;
    if (trials > 1) var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    return {trials, mean, std::sqrt(var / n), seed, analytic::MetricKind::Ber};
}

}  // namespace

McEstimate run_outage_mc(const SystemConfig& cfg, const McOptions& opts) {
    cfg.validate();
    validate_opts(opts);
    const double gth = cfg.gamma_th;
    auto stats = run_chunks(opts.trials, opts.chunk_size, opts.master_seed, opts.workers,
                            [&](rng::TrialRng& rng, ChunkStats& cs) {
                                if (draw_end_to_end(cfg, opts.combining, rng) <= gth) ++cs.count;
                            });
    return finish_outage(stats, opts.trials, opts.master_seed);
}

McEstimate run_ber_mc(const SystemConfig& cfg, const McOptions& opts) {
    cfg.validate();
    validate_opts(opts);
    auto stats = run_chunks(opts.trials, opts.chunk_size, opts.master_seed, opts.workers,
                            [&](rng::TrialRng& rng, ChunkStats& cs) {
                                cs.add_kernel(0.5 * std::exp(-draw_end_to_end(cfg, opts.combining, rng)));
                            });
    return finish_ber(stats, opts.trials, opts.master_seed);
}

McEstimate run_ber_mc_kernel(const std::function<double(rng::TrialRng&)>& snr_draw,
                             const McOptions& opts) {
    validate_opts(opts);
    auto stats = run_chunks(opts.trials, opts.chunk_size, opts.master_seed, opts.workers,
                            [&](rng::TrialRng& rng, ChunkStats& cs) {
                                cs.add_kernel(0.5 * std::exp(-snr_draw(rng)));
                            });
    return finish_ber(stats, opts.trials, opts.master_seed);
}

McEstimate run_outage_mc_kernel(const std::function<double(rng::TrialRng&)>& snr_draw,
                                double gamma_th, const McOptions& opts) {
    validate_opts(opts);
    auto stats = run_chunks(opts.trials, opts.chunk_size, opts.master_seed, opts.workers,
                            [&](rng::TrialRng& rng, ChunkStats& cs) {
                                if (snr_draw(rng) <= gamma_th) ++cs.count;
                            });
    return finish_outage(stats, opts.trials, opts.master_seed);
}

}  // namespace linklab::mcsim

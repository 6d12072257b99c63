#include "linklab/linklab.h"

#include <cstring>
#include <string>
#include <vector>

#include "analytic.hpp"
#include "errata.hpp"
#include "errors.hpp"
#include "specfun.hpp"
#include "sweep.hpp"

using namespace linklab;

namespace {

thread_local std::string t_last_error;

ll_status set_error(ll_status code, const char* what) {
    t_last_error = what ? what : "";
    return code;
}

template <typename Fn>
ll_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const domain_error& e) {
        return set_error(LL_ERR_DOMAIN, e.what());
    } catch (const unsupported_instance& e) {
        return set_error(LL_ERR_UNSUPPORTED, e.what());
    } catch (const numeric_error& e) {
        return set_error(LL_ERR_NUMERIC, e.what());
    } catch (const parse_error& e) {
        return set_error(LL_ERR_PARSE, e.what());
    } catch (const io_error& e) {
        return set_error(LL_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return set_error(LL_ERR_NUMERIC, e.what());
    }
}

ll_status copy_out(const std::string& s, char* buf, size_t* len) {
    if (!len) return set_error(LL_ERR_INVALID, "length pointer is null");
    const size_t need = s.size() + 1;
    if (!buf || *len < need) {
        *len = need;
        return buf ? set_error(LL_ERR_INVALID, "buffer too small") : LL_OK;
    }
    std::memcpy(buf, s.c_str(), need);
    *len = need;
    return LL_OK;
}

struct FsoParams {
    bool gg = true;
    double alpha = 4.0, beta = 1.9, xi = 10.45;
    double kappa = -1.0;  // <0: derive from xi
    double lambda = 1.0;
};

}  // namespace

struct ll_config {
    int n_users = 2;
    double rf_db = 30.0, fso_db = 30.0;
    double gamma_th_db = 10.0;
    double eta = 1.0;
    bool fixed = true;
    double c = 1.0;
    FsoParams fso;

    linkmodel::SystemConfig build() const {
        const double gr = channels::db_to_linear(rf_db);
        const double gf = channels::db_to_linear(fso_db);
        linkmodel::RelayScheme relay;
        if (fixed) relay = linkmodel::FixedGain{c};
        else relay = linkmodel::AdaptiveGain{};
        channels::TurbulenceModel model =
            fso.gg ? (fso.kappa > 0.0
                          ? channels::TurbulenceModel(
                                channels::GammaGammaPointing(fso.alpha, fso.beta, fso.xi, fso.kappa), gf)
                          : channels::TurbulenceModel(
                                channels::GammaGammaPointing(fso.alpha, fso.beta, fso.xi), gf))
                   : channels::TurbulenceModel(channels::NegExpTurbulence(fso.lambda), gf);
        return {n_users, channels::RayleighRf(gr), model, eta, relay,
                channels::db_to_linear(gamma_th_db)};
    }
};

struct ll_sweep {
    sweep::SweepSpec spec;
};

struct ll_curves {
    std::vector<sweep::PerformanceCurve> curves;
    std::vector<std::string> errors;
};

extern "C" {

const char* ll_version(void) { return "1.0.0"; }

const char* ll_last_error(void) { return t_last_error.c_str(); }

ll_status ll_log_gamma(double x, double* out) {
    if (!out) return set_error(LL_ERR_INVALID, "output pointer is null");
    return guarded([&] {
        *out = specfun::log_gamma(x);
        return LL_OK;
    });
}

ll_status ll_meijer_g(const ll_meijer_spec* spec, double* out) {
    if (!spec || !out) return set_error(LL_ERR_INVALID, "null argument");
    if (spec->p < 0 || spec->q < 0 || (spec->p > 0 && !spec->a) || (spec->q > 0 && !spec->b))
        return set_error(LL_ERR_INVALID, "parameter arrays do not match p/q");
    return guarded([&] {
        specfun::MeijerGSpec s;
        s.m = spec->m;
        s.n = spec->n;
        s.a.assign(spec->a, spec->a + spec->p);
        s.b.assign(spec->b, spec->b + spec->q);
        s.z = spec->z;
        *out = specfun::meijer_g(s);
        return LL_OK;
    });
}

ll_config* ll_config_create(void) { return new (std::nothrow) ll_config; }

ll_config* ll_config_clone(const ll_config* cfg) {
    return cfg ? new (std::nothrow) ll_config(*cfg) : nullptr;
}

void ll_config_free(ll_config* cfg) { delete cfg; }

#define LL_REQUIRE(cond, msg) \
    if (!(cond)) return set_error(LL_ERR_INVALID, msg)

ll_status ll_config_set_users(ll_config* cfg, int n_users) {
    LL_REQUIRE(cfg, "null config");
    if (n_users < 1) return set_error(LL_ERR_DOMAIN, "n_users must be >= 1");
    cfg->n_users = n_users;
    return LL_OK;
}

ll_status ll_config_set_mean_snr_db(ll_config* cfg, double rf_db, double fso_db) {
    LL_REQUIRE(cfg, "null config");
    cfg->rf_db = rf_db;
    cfg->fso_db = fso_db;
    return LL_OK;
}

ll_status ll_config_set_gamma_th_db(ll_config* cfg, double gamma_th_db) {
    LL_REQUIRE(cfg, "null config");
    cfg->gamma_th_db = gamma_th_db;
    return LL_OK;
}

ll_status ll_config_set_eta(ll_config* cfg, double eta) {
    LL_REQUIRE(cfg, "null config");
    if (!(eta > 0)) return set_error(LL_ERR_DOMAIN, "eta must be positive");
    cfg->eta = eta;
    return LL_OK;
}

ll_status ll_config_set_relay_fixed(ll_config* cfg, double c) {
    LL_REQUIRE(cfg, "null config");
    if (!(c > 0)) return set_error(LL_ERR_DOMAIN, "C must be positive");
    cfg->fixed = true;
    cfg->c = c;
    return LL_OK;
}

ll_status ll_config_set_relay_adaptive(ll_config* cfg) {
    LL_REQUIRE(cfg, "null config");
    cfg->fixed = false;
    return LL_OK;
}

ll_status ll_config_set_gg(ll_config* cfg, double alpha, double beta, double xi) {
    LL_REQUIRE(cfg, "null config");
    return guarded([&] {
        channels::GammaGammaPointing probe(alpha, beta, xi);  // validates
        (void)probe;
        cfg->fso.gg = true;
        cfg->fso.alpha = alpha;
        cfg->fso.beta = beta;
        cfg->fso.xi = xi;
        cfg->fso.kappa = -1.0;
        return LL_OK;
    });
}

ll_status ll_config_set_gg_kappa(ll_config* cfg, double kappa) {
    LL_REQUIRE(cfg, "null config");
    if (!cfg->fso.gg) return set_error(LL_ERR_DOMAIN, "kappa applies to the Gamma-Gamma model");
    if (!(kappa > 0)) return set_error(LL_ERR_DOMAIN, "kappa must be positive");
    cfg->fso.kappa = kappa;
    return LL_OK;
}

ll_status ll_config_set_negexp(ll_config* cfg, double lambda) {
    LL_REQUIRE(cfg, "null config");
    if (!(lambda > 0)) return set_error(LL_ERR_DOMAIN, "lambda must be positive");
    cfg->fso.gg = false;
    cfg->fso.lambda = lambda;
    return LL_OK;
}

ll_status ll_outage(const ll_config* cfg, ll_method method, double* out) {
    LL_REQUIRE(cfg && out, "null argument");
    return guarded([&] {
        const auto sys = cfg->build();
        *out = method == LL_METHOD_CLOSED_FORM
                   ? analytic::closed_form(sys, analytic::MetricKind::Outage)
                   : analytic::outage_quadrature(sys);
        return LL_OK;
    });
}

ll_status ll_ber(const ll_config* cfg, ll_method method, double* out) {
    LL_REQUIRE(cfg && out, "null argument");
    return guarded([&] {
        const auto sys = cfg->build();
        *out = method == LL_METHOD_CLOSED_FORM
                   ? analytic::closed_form(sys, analytic::MetricKind::Ber)
                   : analytic::ber_quadrature(sys);
        return LL_OK;
    });
}

ll_status ll_channel_pdf(const ll_config* cfg, ll_link link, double gamma, double* out) {
    LL_REQUIRE(cfg && out, "null argument");
    return guarded([&] {
        const auto sys = cfg->build();
        *out = link == LL_LINK_FSO ? channels::pdf_snr(sys.fso, gamma)
                                   : channels::pdf_snr(sys.rf, gamma);
        return LL_OK;
    });
}

ll_status ll_channel_cdf(const ll_config* cfg, ll_link link, double gamma, double* out) {
    LL_REQUIRE(cfg && out, "null argument");
    return guarded([&] {
        const auto sys = cfg->build();
        *out = link == LL_LINK_FSO ? channels::cdf_snr(sys.fso, gamma)
                                   : channels::cdf_snr(sys.rf, gamma);
        return LL_OK;
    });
}

static mcsim::McOptions convert_mc(const ll_mc_options* opts) {
    mcsim::McOptions mo;
    if (opts) {
        mo.trials = opts->trials ? opts->trials : mo.trials;
        mo.master_seed = opts->seed;
        mo.chunk_size = opts->chunk_size ? opts->chunk_size : mo.chunk_size;
        mo.combining = opts->combining == LL_COMBINING_MIN_APPROX
                           ? mcsim::CombiningMode::MinApprox
                           : mcsim::CombiningMode::Exact;
        mo.workers = opts->workers;
    }
    return mo;
}

ll_status ll_mc_outage(const ll_config* cfg, const ll_mc_options* opts, ll_mc_estimate* out) {
    LL_REQUIRE(cfg && out, "null argument");
    return guarded([&] {
        const auto est = mcsim::run_outage_mc(cfg->build(), convert_mc(opts));
        *out = {est.trials, est.estimate, est.std_error, est.master_seed};
        return LL_OK;
    });
}

ll_status ll_mc_ber(const ll_config* cfg, const ll_mc_options* opts, ll_mc_estimate* out) {
    LL_REQUIRE(cfg && out, "null argument");
    return guarded([&] {
        const auto est = mcsim::run_ber_mc(cfg->build(), convert_mc(opts));
        *out = {est.trials, est.estimate, est.std_error, est.master_seed};
        return LL_OK;
    });
}

ll_sweep* ll_sweep_parse(const char* json_text) {
    if (!json_text) {
        set_error(LL_ERR_INVALID, "null config text");
        return nullptr;
    }
    try {
        return new ll_sweep{sweep::parse_config(json_text)};
    } catch (const std::exception& e) {
        set_error(LL_ERR_PARSE, e.what());
        return nullptr;
    }
}

ll_sweep* ll_sweep_parse_file(const char* path) {
    if (!path) {
        set_error(LL_ERR_INVALID, "null path");
        return nullptr;
    }
    try {
        return new ll_sweep{sweep::parse_config_file(path)};
    } catch (const io_error& e) {
        set_error(LL_ERR_IO, e.what());
        return nullptr;
    } catch (const std::exception& e) {
        set_error(LL_ERR_PARSE, e.what());
        return nullptr;
    }
}

ll_sweep* ll_sweep_preset(const char* name) {
    if (!name) {
        set_error(LL_ERR_INVALID, "null preset name");
        return nullptr;
    }
    try {
        return new ll_sweep{sweep::preset(name)};
    } catch (const std::exception& e) {
        set_error(LL_ERR_PARSE, e.what());
        return nullptr;
    }
}

void ll_sweep_free(ll_sweep* sweep) { delete sweep; }

ll_status ll_sweep_canonical(const ll_sweep* sweep_, char* buf, size_t* len) {
    LL_REQUIRE(sweep_, "null sweep");
    return guarded([&] { return copy_out(sweep::canonical_config(sweep_->spec), buf, len); });
}

ll_curves* ll_sweep_run(const ll_sweep* sweep_, const ll_run_options* opts) {
    if (!sweep_) {
        set_error(LL_ERR_INVALID, "null sweep");
        return nullptr;
    }
    try {
        sweep::RunOptions ro;
        if (opts) {
            if (opts->methods && *opts->methods) {
                std::vector<analytic::Method> methods;
                std::string list = opts->methods;
                size_t start = 0;
                while (start <= list.size()) {
                    const size_t end = list.find(',', start);
                    const std::string item = list.substr(
                        start, end == std::string::npos ? std::string::npos : end - start);
                    if (item == "closed") methods.push_back(analytic::Method::ClosedForm);
                    else if (item == "quad") methods.push_back(analytic::Method::Quadrature);
                    else if (item == "mc") methods.push_back(analytic::Method::MonteCarlo);
                    else throw parse_error("unknown method \"" + item + "\"", "methods");
                    if (end == std::string::npos) break;
                    start = end + 1;
                }
                ro.methods = methods;
            }
            if (opts->trials) ro.trials = opts->trials;
            if (opts->seed) ro.seed = opts->seed;
            if (opts->trusted >= 0) ro.trusted = opts->trusted != 0;
            ro.workers = opts->workers;
        }
        auto curves = sweep::run_sweep(sweep_->spec, ro);
        auto out = new ll_curves;
        for (auto& c : curves)
            for (auto& e : c.errors) out->errors.push_back(e);
        out->curves = std::move(curves);
        return out;
    } catch (const std::exception& e) {
        set_error(LL_ERR_NUMERIC, e.what());
        return nullptr;
    }
}

void ll_curves_free(ll_curves* curves) { delete curves; }

size_t ll_curves_row_count(const ll_curves* curves) {
    if (!curves) return 0;
    size_t n = 0;
    for (const auto& c : curves->curves) n += c.points.size();
    return n;
}

ll_status ll_curves_row(const ll_curves* curves, size_t index, ll_point* out) {
    LL_REQUIRE(curves && out, "null argument");
    size_t i = index;
    for (const auto& c : curves->curves) {
        if (i < c.points.size()) {
            const auto& p = c.points[i];
            out->gamma_avg_db = p.gamma_avg_db;
            out->metric = p.metric;
            out->ci_half_width = p.ci_half_width;
            out->n_users = c.n_users;
            std::snprintf(out->metric_kind, sizeof out->metric_kind, "%s",
                          sweep::metric_name(p.kind));
            std::snprintf(out->method, sizeof out->method, "%s", sweep::method_name(p.method));
            std::snprintf(out->regime, sizeof out->regime, "%s", c.regime.c_str());
            std::snprintf(out->relay, sizeof out->relay, "%s", c.relay.c_str());
            return LL_OK;
        }
        i -= c.points.size();
    }
    return set_error(LL_ERR_INVALID, "row index out of range");
}

size_t ll_curves_error_count(const ll_curves* curves) {
    return curves ? curves->errors.size() : 0;
}

ll_status ll_curves_error(const ll_curves* curves, size_t index, char* buf, size_t* len) {
    LL_REQUIRE(curves, "null curves");
    if (index >= curves->errors.size())
        return set_error(LL_ERR_INVALID, "error index out of range");
    return copy_out(curves->errors[index], buf, len);
}

ll_status ll_curves_write_csv(const ll_curves* curves, const char* path) {
    LL_REQUIRE(curves && path, "null argument");
    return guarded([&] {
        sweep::emit_csv(curves->curves, path);
        return LL_OK;
    });
}

ll_status ll_errata_set_path(const char* path) {
    LL_REQUIRE(path, "null path");
    errata::set_path(path);
    return LL_OK;
}

ll_status ll_errata_text(char* buf, size_t* len) {
    return guarded([&] {
        analytic::record_standing_errata();
        return copy_out(errata::render(), buf, len);
    });
}

}  // extern "C"

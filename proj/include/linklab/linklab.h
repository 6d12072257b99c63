/* linklab — dual-hop multiuser hybrid FSO/RF link performance library.
 *
 * C API over the C++ core: opaque handles, integer status codes, and a
 * thread-local error message. All SNR quantities at this surface are in dB
 * unless a name says otherwise; probabilities are linear.
 */
#ifndef LINKLAB_H
#define LINKLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ll_status {
    LL_OK = 0,
    LL_ERR_DOMAIN = 1,       /* input outside a documented domain */
    LL_ERR_UNSUPPORTED = 2,  /* no convergent special-function strategy */
    LL_ERR_NUMERIC = 3,      /* integrator / consistency failure */
    LL_ERR_PARSE = 4,        /* config document rejected */
    LL_ERR_IO = 5,           /* file system failure */
    LL_ERR_INVALID = 6       /* null handle, bad enum, buffer too small */
} ll_status;

const char* ll_version(void);
/* Message for the most recent failure on this thread. */
const char* ll_last_error(void);

/* ---- special functions ---- */

ll_status ll_log_gamma(double x, double* out);

typedef struct ll_meijer_spec {
    int m, n;
    const double* a; /* length p */
    const double* b; /* length q */
    int p, q;
    double z;        /* > 0 */
} ll_meijer_spec;

ll_status ll_meijer_g(const ll_meijer_spec* spec, double* out);

/* ---- scenario configuration ---- */

typedef struct ll_config ll_config;

/* Defaults: N=2, moderate Gamma-Gamma regime, fixed gain C=1, eta=1,
 * gamma_th=10 dB, both mean SNRs 30 dB. */
ll_config* ll_config_create(void);
ll_config* ll_config_clone(const ll_config* cfg);
void ll_config_free(ll_config* cfg);

ll_status ll_config_set_users(ll_config* cfg, int n_users);
ll_status ll_config_set_mean_snr_db(ll_config* cfg, double rf_db, double fso_db);
ll_status ll_config_set_gamma_th_db(ll_config* cfg, double gamma_th_db);
ll_status ll_config_set_eta(ll_config* cfg, double eta);
ll_status ll_config_set_relay_fixed(ll_config* cfg, double c);
ll_status ll_config_set_relay_adaptive(ll_config* cfg);
ll_status ll_config_set_gg(ll_config* cfg, double alpha, double beta, double xi);
ll_status ll_config_set_gg_kappa(ll_config* cfg, double kappa);
ll_status ll_config_set_negexp(ll_config* cfg, double lambda);

/* ---- metrics ---- */

typedef enum ll_method {
    LL_METHOD_CLOSED_FORM = 0,
    LL_METHOD_QUADRATURE = 1
} ll_method;

ll_status ll_outage(const ll_config* cfg, ll_method method, double* out);
ll_status ll_ber(const ll_config* cfg, ll_method method, double* out);

/* ---- per-link distributions ---- */

typedef enum ll_link { LL_LINK_FSO = 0, LL_LINK_RF = 1 } ll_link;

/* gamma is linear SNR here. For LL_LINK_RF the single-user Rayleigh law is
 * evaluated; best-of-N selection statistics live in the sweep layer. */
ll_status ll_channel_pdf(const ll_config* cfg, ll_link link, double gamma, double* out);
ll_status ll_channel_cdf(const ll_config* cfg, ll_link link, double gamma, double* out);

/* ---- Monte Carlo ---- */

typedef enum ll_combining { LL_COMBINING_EXACT = 0, LL_COMBINING_MIN_APPROX = 1 } ll_combining;

typedef struct ll_mc_options {
    uint64_t trials;
    uint64_t seed;
    uint32_t chunk_size;   /* 0 -> 65536 */
    ll_combining combining;
    int workers;           /* 0 -> hardware concurrency */
} ll_mc_options;

typedef struct ll_mc_estimate {
    uint64_t trials;
    double estimate;
    double std_error;
    uint64_t seed;
} ll_mc_estimate;

ll_status ll_mc_outage(const ll_config* cfg, const ll_mc_options* opts, ll_mc_estimate* out);
ll_status ll_mc_ber(const ll_config* cfg, const ll_mc_options* opts, ll_mc_estimate* out);

/* ---- sweeps ---- */

typedef struct ll_sweep ll_sweep;
typedef struct ll_curves ll_curves;

ll_sweep* ll_sweep_parse(const char* json_text);
ll_sweep* ll_sweep_parse_file(const char* path);
ll_sweep* ll_sweep_preset(const char* name); /* fig2 .. fig8 */
void ll_sweep_free(ll_sweep* sweep);

/* Canonical JSON of a parsed spec. Writes up to *len bytes including the
 * terminator; sets *len to the required size. LL_ERR_INVALID if too small. */
ll_status ll_sweep_canonical(const ll_sweep* sweep, char* buf, size_t* len);

typedef struct ll_run_options {
    const char* methods;  /* comma list "closed,quad,mc"; NULL -> spec's */
    uint64_t trials;      /* 0 -> spec's */
    uint64_t seed;        /* 0 -> spec's */
    int trusted;          /* <0 -> spec's, else 0/1 */
    int workers;          /* 0 -> hardware concurrency */
} ll_run_options;

ll_curves* ll_sweep_run(const ll_sweep* sweep, const ll_run_options* opts /* nullable */);
void ll_curves_free(ll_curves* curves);

typedef struct ll_point {
    double gamma_avg_db;
    double metric;
    double ci_half_width;
    int n_users;
    char metric_kind[8];  /* "outage" | "ber" */
    char method[8];       /* "closed" | "quad" | "mc" */
    char regime[48];
    char relay[12];       /* "fixed" | "adaptive" */
} ll_point;

size_t ll_curves_row_count(const ll_curves* curves);
ll_status ll_curves_row(const ll_curves* curves, size_t index, ll_point* out);
size_t ll_curves_error_count(const ll_curves* curves);
ll_status ll_curves_error(const ll_curves* curves, size_t index, char* buf, size_t* len);
ll_status ll_curves_write_csv(const ll_curves* curves, const char* path);

/* ---- errata registry ---- */

ll_status ll_errata_set_path(const char* path);
/* Ensures the standing printed-equation notes are recorded, then renders the
 * registry. Same buffer contract as ll_sweep_canonical. */
ll_status ll_errata_text(char* buf, size_t* len);

#ifdef __cplusplus
}
#endif

#endif /* LINKLAB_H */

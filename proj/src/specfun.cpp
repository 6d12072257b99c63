#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "errors.hpp"
#include "real.hpp"

namespace linklab::specfun {

namespace {

bool near_int(double x, double tol = 1e-9) {
    return std::abs(x - std::round(x)) < tol;
}

struct SeriesResult {
    Real total;
    mpfr_exp_t max_exp;   // largest binary exponent seen among terms / partials
    bool saw_nonzero;
};

// One Slater-expansion pass at fixed precision.
//
//   G = sum_h sum_k T_{h,k},   T_{h,k} = (-1)^k/k! z^{b_h+k}
//       * prod_{j<=m, j!=h} Gamma(b_j - b_h - k) * prod_{j<=n} Gamma(1 - a_j + b_h + k)
//       / [ prod_{j>m} Gamma(1 - b_j + b_h + k) * prod_{j>n} Gamma(a_j - b_h - k) ]
//
// Factor bookkeeping per family: numerator Gamma(x+k) (x = 1-a_j+b_h) and
// Gamma(y-k) (y = b_j-b_h); denominator Gamma(w+k) (w = 1-b_j+b_h) and
// Gamma(u-k) (u = a_j-b_h). Integer-valued u terminates the series at k = u;
// integer-valued w <= 0 zeroes the leading terms up to k = -w.
SeriesResult eval_series(int m, int n, const std::vector<double>& a,
                         const std::vector<double>& b, double z,
                         mpfr_prec_t prec, const MeijerGOptions& opts) {
    const int p = static_cast<int>(a.size());
    const int q = static_cast<int>(b.size());
    // Truncation must outlive inter-family cancellation: tails are summed down
    // to 2^-(prec-48) of the running scale, so whatever survives cancellation
    // is still good to ~48 bits below the accept threshold in eval_adaptive.
    const int tol_bits = std::max(-static_cast<int>(std::ilogb(opts.rel_tol)) + 6,
                                  static_cast<int>(prec) - 48);
    const int tol_log2 = -tol_bits;

    Real total(prec);
    Real zr(z, prec);
    Real lnz = log(zr);
    mpfr_exp_t max_exp = mpfr_get_emin();
    bool saw_nonzero = false;

    Real scratch(prec), combined(prec), fam(prec), term(prec), ratio(prec);
    Real prev_abs(prec), thresh(prec);

    for (int h = 0; h < m; ++h) {
        const double bh = b[h];
        // build the offsets in mpfr so near-pole distances keep full precision
        // (double-rounded differences would be amplified by the 1/eps factors)
        std::vector<Real> xs, ys, ws, us;
        auto diff = [&](double plus, double minus, double extra) {
            Real r(plus, prec);
            mpfr_sub_d(r.raw(), r.raw(), minus, MPFR_RNDN);
            mpfr_add_d(r.raw(), r.raw(), extra, MPFR_RNDN);
            return r;
        };
        for (int j = 0; j < n; ++j) xs.push_back(diff(1.0, a[j], bh));
        for (int j = 0; j < m; ++j)
            if (j != h) ys.push_back(diff(b[j], bh, 0.0));
        for (int j = m; j < q; ++j) ws.push_back(diff(1.0, b[j], bh));
        for (int j = n; j < p; ++j) us.push_back(diff(a[j], bh, 0.0));

        long death = -1;  // series terminates at k = death (exclusive)
        bool dead_family = false;
        for (int j = n; j < p; ++j) {
            const double u = a[j] - bh;
            if (near_int(u)) {
                const long ui = std::lround(u);
                if (ui <= 0) { dead_family = true; break; }
                death = (death < 0) ? ui : std::min(death, ui);
            }
        }
        if (dead_family) continue;
        long k_start = 0;
        for (int j = m; j < q; ++j) {
            const double w = 1.0 - b[j] + bh;
            if (near_int(w)) {
                const long wi = std::lround(w);
                if (wi <= 0) k_start = std::max(k_start, 1 - wi);
            }
        }
        if (death >= 0 && k_start >= death) continue;

        // T_{h,k_start} in log space with sign tracking
        int sign = (k_start % 2) ? -1 : 1;
        Real logmag = lnz * (bh + static_cast<double>(k_start));
        {
            scratch.set(static_cast<double>(k_start) + 1.0);
            auto [lg, sg] = log_abs_gamma(scratch);
            (void)sg;
            logmag -= lg;
        }
        auto accumulate = [&](const Real& base, long k, int dir, int num) {
            // dir: +1 -> Gamma(base + k), -1 -> Gamma(base - k); num: +1 numerator
            scratch.set(base);
            if (dir > 0)
                mpfr_add_si(scratch.raw(), scratch.raw(), k, MPFR_RNDN);
            else
                mpfr_sub_si(scratch.raw(), scratch.raw(), k, MPFR_RNDN);
            auto [lg, sg] = log_abs_gamma(scratch);
            sign *= sg;
            if (num > 0) logmag += lg; else logmag -= lg;
        };
        for (const auto& x : xs) accumulate(x, k_start, +1, +1);
        for (const auto& y : ys) accumulate(y, k_start, -1, +1);
        for (const auto& w : ws) accumulate(w, k_start, +1, -1);
        for (const auto& u : us) accumulate(u, k_start, -1, -1);

        term = exp(logmag);
        if (sign < 0) mpfr_neg(term.raw(), term.raw(), MPFR_RNDN);

        fam.set(0.0);
        prev_abs.set(0.0);
        int consec = 0;
        long k = k_start;
        while (true) {
            fam += term;
            combined = total + fam;
            if (!term.is_zero()) {
                saw_nonzero = true;
                max_exp = std::max(max_exp, term.exponent());
            }
            if (!combined.is_zero()) max_exp = std::max(max_exp, combined.exponent());

            if (death >= 0 && k + 1 >= death) break;

            // truncation: three consecutive terms below tol*scale (with tail
            // margin folded into tol_log2) and a contracting term ratio
            bool small = false;
            if (!term.is_zero()) {
                mpfr_exp_t scale_exp = mpfr_get_emin();
                if (!combined.is_zero()) scale_exp = combined.exponent();
                if (!fam.is_zero()) scale_exp = std::max(scale_exp, fam.exponent());
                small = term.exponent() <= scale_exp + tol_log2;
            }
            if (small) {
                if (++consec >= 3 && !prev_abs.is_zero()) {
                    thresh = prev_abs * 0.95;
                    Real cur = abs(term);
                    if (cur < thresh) break;
                }
            } else {
                consec = 0;
            }
            if (k - k_start >= opts.max_terms_per_pole)
                throw unsupported_instance(
                    "meijer_g: series cap exceeded at pole family " + std::to_string(h) +
                    " (z=" + std::to_string(z) + ")");

            // T_{k+1}/T_k
            ratio.set(-z);
            mpfr_div_si(ratio.raw(), ratio.raw(), k + 1, MPFR_RNDN);
            for (const auto& x : xs) {
                scratch.set(x);
                mpfr_add_si(scratch.raw(), scratch.raw(), k, MPFR_RNDN);
                ratio *= scratch;
            }
            for (const auto& y : ys) {
                scratch.set(y);
                mpfr_sub_si(scratch.raw(), scratch.raw(), k + 1, MPFR_RNDN);
                ratio /= scratch;
            }
            for (const auto& w : ws) {
                scratch.set(w);
                mpfr_add_si(scratch.raw(), scratch.raw(), k, MPFR_RNDN);
                ratio /= scratch;
            }
            for (const auto& u : us) {
                scratch.set(u);
                mpfr_sub_si(scratch.raw(), scratch.raw(), k + 1, MPFR_RNDN);
                ratio *= scratch;
            }
            prev_abs = abs(term);
            term *= ratio;
            ++k;
        }
        total += fam;
    }
    return {std::move(total), max_exp, saw_nonzero};
}

// Precision-escalation loop: rerun until the observed cancellation leaves
// at least ~100 clean bits in the result.
double eval_adaptive(int m, int n, const std::vector<double>& a,
                     const std::vector<double>& b, double z,
                     const MeijerGOptions& opts) {
    constexpr mpfr_prec_t kMaxPrec = 1 << 19;
    mpfr_prec_t prec = 128;
    for (int attempt = 0; attempt < 40; ++attempt) {
        SeriesResult r = eval_series(m, n, a, b, z, prec, opts);
        if (!r.saw_nonzero) return 0.0;
        mpfr_exp_t cancel;
        if (r.total.is_zero())
            cancel = prec;  // complete cancellation at this precision
        else
            cancel = r.max_exp - r.total.exponent();
        if (cancel < 0) cancel = 0;
        if (prec - cancel >= 100) return r.total.to_double();
        prec = std::max(static_cast<mpfr_prec_t>(cancel) + 192, 2 * prec);
        if (prec > kMaxPrec)
            throw unsupported_instance("meijer_g: cancellation exceeds precision budget");
    }
    throw numeric_error("meijer_g: adaptive precision did not settle");
}

}  // namespace

void MeijerGSpec::validate() const {
    const int P = p(), Q = q();
    if (m < 0 || m > Q || n < 0 || n > P)
        throw domain_error("meijer_g: require 0 <= m <= q and 0 <= n <= p");
    if (!(z > 0.0) || !std::isfinite(z))
        throw domain_error("meijer_g: argument z must be positive and finite");
    for (double v : a)
        if (!std::isfinite(v)) throw domain_error("meijer_g: non-finite a parameter");
    for (double v : b)
        if (!std::isfinite(v)) throw domain_error("meijer_g: non-finite b parameter");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const double d = a[i] - b[j];
            if (d >= 0.5 && near_int(d))
                throw domain_error("meijer_g: a_i - b_j is a positive integer (pole overlap)");
        }
}

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw domain_error("log_gamma: x must be positive and finite");
    int sign = 0;
    return lgamma_r(x, &sign);
}

double meijer_g(const MeijerGSpec& spec, const MeijerGOptions& opts) {
    spec.validate();
    int m = spec.m, n = spec.n;
    std::vector<double> a = spec.a, b = spec.b;
    double z = spec.z;
    int p = spec.p(), q = spec.q();

    auto flip = [&] {
        std::vector<double> na(b.size()), nb(a.size());
        for (size_t i = 0; i < b.size(); ++i) na[i] = 1.0 - b[i];
        for (size_t i = 0; i < a.size(); ++i) nb[i] = 1.0 - a[i];
        std::swap(m, n);
        a = std::move(na);
        b = std::move(nb);
        z = 1.0 / z;
        std::swap(p, q);
    };
    if (p > q || (p == q && z > 1.0) || (m == 0 && n > 0)) flip();
    if (m == 0 || p > q || (p == q && z >= 1.0))
        throw unsupported_instance("meijer_g: no convergent residue expansion for this instance");

    std::set<int> shifted;
    if (opts.shift_all_poles) {
        for (int i = 1; i < m; ++i) shifted.insert(i);
    } else {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j)
                if (near_int(b[i] - b[j])) shifted.insert(i);
    }
    if (shifted.empty()) return eval_adaptive(m, n, a, b, z, opts);

    auto with_shift = [&](double eps) {
        std::vector<double> bb = b;
        int mult = 1;
        for (int i : shifted) bb[i] = b[i] + mult++ * eps;
        return eval_adaptive(m, n, a, bb, z, opts);
    };
    const double v1 = with_shift(opts.pole_shift);
    if (!opts.extrapolate_shift) return v1;
    const double v2 = with_shift(opts.pole_shift / 2);
    if (std::abs(v1 - v2) > std::max(1e-7 * std::abs(v2), 1e-290)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "meijer_g: pole-shift evaluations disagree (eps=%.3g: %.17g vs %.17g)",
                      opts.pole_shift, v1, v2);
        throw numeric_error(msg);
    }
    return 2 * v2 - v1;
}

double sqrt_exp_laplace(double a, double s) {
    if (!(a >= 0.0) || !std::isfinite(a) || !(s > 0.0) || !std::isfinite(s))
        throw domain_error("sqrt_exp_laplace: require a >= 0 and s > 0");
    if (a == 0.0) return 1.0 / s;

    const mpfr_prec_t prec = 320;
    Real ar(a, prec), sr(s, prec);
    Real t = ar / sqrt(sr);

    // erfcx(t) = e^{t^2} erfc(t)
    Real ex(prec);
    double td = t.to_double();
    Real pi(prec);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    if (td < 30.0) {
        Real t2 = t * t;
        Real er(prec);
        mpfr_erfc(er.raw(), t.raw(), MPFR_RNDN);
        ex = exp(t2) * er;
    } else {
        // asymptotic: erfcx(t) = 1/(sqrt(pi) t) sum_k (-1)^k (2k-1)!!/(2t^2)^k
        Real t2inv(prec);
        t2inv.set(0.5);
        t2inv /= t;
        t2inv /= t;  // 1/(2 t^2)
        Real sum(1.0, prec), c(1.0, prec);
        for (int k = 0; k < 400; ++k) {
            c *= t2inv;
            c *= static_cast<double>(2 * k + 1);
            mpfr_neg(c.raw(), c.raw(), MPFR_RNDN);
            sum += c;
            if (!c.is_zero() && c.exponent() < -300) break;
        }
        ex = sum / (sqrt(pi) * t);
    }
    // 1/s - a sqrt(pi) s^{-3/2} erfcx(a/sqrt(s))
    Real shalf = sqrt(sr);
    Real result = Real(1.0, prec) / sr - ar * sqrt(pi) / (sr * shalf) * ex;
    return result.to_double();
}

}  // namespace linklab::specfun

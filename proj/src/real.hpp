#pragma once

#include <mpfr.h>

#include <cmath>
#include <utility>

namespace linklab::specfun {

// Thin RAII value wrapper over mpfr_t. Binary operators produce results at
// the larger operand precision; everything rounds to nearest.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(double d, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    // Binary exponent of |x|; only meaningful for nonzero finite values.
    mpfr_exp_t exponent() const { return mpfr_get_exp(v_); }

    void set(double d) { mpfr_set_d(v_, d, MPFR_RNDN); }
    void set(const Real& o) { mpfr_set(v_, o.v_, MPFR_RNDN); }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(double d) { mpfr_mul_d(v_, v_, d, MPFR_RNDN); return *this; }
    Real& operator/=(double d) { mpfr_div_d(v_, v_, d, MPFR_RNDN); return *this; }
    Real& operator+=(double d) { mpfr_add_d(v_, v_, d, MPFR_RNDN); return *this; }

    friend Real operator+(Real a, const Real& b) { a += b; return a; }
    friend Real operator-(Real a, const Real& b) { a -= b; return a; }
    friend Real operator*(Real a, const Real& b) { a *= b; return a; }
    friend Real operator/(Real a, const Real& b) { a /= b; return a; }
    friend Real operator*(Real a, double d) { a *= d; return a; }
    friend Real operator/(Real a, double d) { a /= d; return a; }

    Real operator-() const {
        Real r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }

    friend Real abs(const Real& x) {
        Real r(x);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend Real exp(const Real& x) {
        Real r(x.prec());
        mpfr_exp(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real log(const Real& x) {
        Real r(x.prec());
        mpfr_log(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real sqrt(const Real& x) {
        Real r(x.prec());
        mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    // log|Gamma(x)| with the sign of Gamma(x); valid for any non-pole real.
    friend std::pair<Real, int> log_abs_gamma(const Real& x) {
        Real r(x.prec());
        int sign = 0;
        mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
        return {std::move(r), sign};
    }

  private:
    mpfr_t v_;
};

}  // namespace linklab::specfun

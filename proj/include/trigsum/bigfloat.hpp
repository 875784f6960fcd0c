#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace trigsum {

class Rational;

/// Arbitrary-precision real number backed by MPFR, round-to-nearest.
/// Every value carries its own precision; binary operations work at the
/// larger of the two operand precisions.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(long value, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, value, MPFR_RNDN); }
    BigFloat(double value, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, value, MPFR_RNDN); }
    BigFloat(const Rational& value, mpfr_prec_t prec);

    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(pmax(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(pmax(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(pmax(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(pmax(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    BigFloat operator-() const { BigFloat r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend BigFloat operator*(const BigFloat& a, long b) {
        BigFloat r(a.precision()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, long b) {
        BigFloat r(a.precision()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    BigFloat abs() const { BigFloat r(precision()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sqrt() const { BigFloat r(precision()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }

    static BigFloat pi(mpfr_prec_t prec) { BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    /// 2^e at the given precision.
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(prec); mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN); return r;
    }

    BigFloat sin() const { BigFloat r(precision()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat cos() const { BigFloat r(precision()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat exp() const { BigFloat r(precision()); mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    std::pair<BigFloat, BigFloat> sin_cos() const {
        BigFloat s(precision()), c(precision());
        mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
        return {std::move(s), std::move(c)};
    }

    /// Round-trippable decimal string; digit count derived from precision.
    std::string str() const;

private:
    static mpfr_prec_t pmax(const BigFloat& a, const BigFloat& b) {
        mpfr_prec_t pa = mpfr_get_prec(a.v_), pb = mpfr_get_prec(b.v_);
        return pa > pb ? pa : pb;
    }
    mpfr_t v_;
};

}  // namespace trigsum

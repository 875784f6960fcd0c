#pragma once

#include <gmp.h>

#include <string>

namespace trigsum {

/// Exact rational backed by GMP mpq_t. Always canonical: gcd(|num|, den) = 1,
/// den >= 1. Carrier of every closed-form value.
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) { mpq_init(v_); mpq_set_si(v_, n, 1); }
    Rational(long n, long d);
    explicit Rational(const std::string& s);

    Rational(const Rational& o) { mpq_init(v_); mpq_set(v_, o.v_); }
    Rational(Rational&& o) noexcept { mpq_init(v_); mpq_swap(v_, o.v_); }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    mpq_srcptr raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r; mpq_add(r.v_, a.v_, b.v_); return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r; mpq_sub(r.v_, a.v_, b.v_); return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r; mpq_mul(r.v_, a.v_, b.v_); return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { Rational r; mpq_neg(r.v_, v_); return r; }

    Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    Rational abs() const { Rational r; mpq_abs(r.v_, v_); return r; }
    /// Floor to an integer-valued Rational (floor semantics for negatives;
    /// the sawtooth function depends on this).
    Rational floor() const;

    /// "n" when integral, "n/d" otherwise.
    std::string str() const;

    static Rational pow(const Rational& base, unsigned long e);

private:
    mpq_t v_;
};

/// Exact Gaussian rational a + b*i. Closed under +,-,*,/ (nonzero divisor).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re), im_(0) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    GaussianRational conj() const { return {re_, -im_}; }
    bool is_real() const { return im_.is_zero(); }

    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace trigsum

#pragma once

#include <utility>
#include <vector>

#include "trigsum/bigfloat.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/rational.hpp"

namespace trigsum {

/// Working precision and the comparison tolerance every check uses.
/// tolerance = 2^-(precision_bits - 32), relative to max(1, |reference|).
struct PrecisionContext {
    mpfr_prec_t precision_bits;
    BigFloat tolerance;
};

PrecisionContext make_context(long precision_bits);
PrecisionContext make_context_with_tolerance(long precision_bits, const BigFloat& tolerance);

/// Arbitrary-precision complex value at context precision.
class HighComplex {
public:
    HighComplex() = default;
    HighComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit HighComplex(const BigFloat& re) : re_(re), im_(0L, re.precision()) {}
    HighComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(0L, prec) {}

    static HighComplex from_rational(const Rational& r, mpfr_prec_t prec) {
        return HighComplex(BigFloat(r, prec), BigFloat(0L, prec));
    }
    static HighComplex from_gaussian(const GaussianRational& g, mpfr_prec_t prec) {
        return HighComplex(BigFloat(g.re(), prec), BigFloat(g.im(), prec));
    }
    static HighComplex i(mpfr_prec_t prec) { return HighComplex(BigFloat(0L, prec), BigFloat(1L, prec)); }

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }

    friend HighComplex operator+(const HighComplex& a, const HighComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend HighComplex operator-(const HighComplex& a, const HighComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend HighComplex operator*(const HighComplex& a, const HighComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend HighComplex operator/(const HighComplex& a, const HighComplex& b);
    HighComplex operator-() const { return {-re_, -im_}; }

    HighComplex& operator+=(const HighComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    HighComplex& operator-=(const HighComplex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    HighComplex& operator*=(const HighComplex& o) { *this = *this * o; return *this; }

    friend HighComplex operator*(const HighComplex& a, const BigFloat& s) { return {a.re_ * s, a.im_ * s}; }
    friend HighComplex operator*(const HighComplex& a, long s) { return {a.re_ * s, a.im_ * s}; }
    friend HighComplex operator/(const HighComplex& a, long s) { return {a.re_ / s, a.im_ / s}; }

    HighComplex conj() const { return {re_, -im_}; }
    BigFloat abs() const;
    HighComplex inverse() const;
    /// e^z for complex z.
    HighComplex exp() const;
    HighComplex pow(unsigned long e) const;

    std::string str() const;

private:
    BigFloat re_;
    BigFloat im_;
};

/// e^(2*pi*i*n/k), n reduced mod k, from a single high-precision 2*pi constant.
HighComplex root_of_unity(const PrecisionContext& ctx, long k, long n);

/// All k-th roots z_1..z_k (index 0 holds z_1). Shared across sums over one modulus.
std::vector<HighComplex> roots_of_unity(const PrecisionContext& ctx, long k);

/// |a - b| <= tolerance * max(1, |b|); b is the reference side.
bool approx_equal(const PrecisionContext& ctx, const HighComplex& a, const HighComplex& b);
bool approx_equal(const PrecisionContext& ctx, const BigFloat& a, const BigFloat& b);

/// Exact Horner evaluation, coefficients in ascending degree order.
Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x);

/// sin(pi*num/den) and cos(pi*num/den) with exact integer argument reduction
/// mod 2*den (keeps large multiples of pi from eating precision). Exact zeros
/// at integer and half-integer multiples are returned as exact zeros.
BigFloat sin_pi_frac(const PrecisionContext& ctx, long num, long den);
BigFloat cos_pi_frac(const PrecisionContext& ctx, long num, long den);
/// cot(pi*num/den); error if the angle is a multiple of pi.
BigFloat cot_pi_frac(const PrecisionContext& ctx, long num, long den);

long gcd(long a, long b);

}  // namespace trigsum

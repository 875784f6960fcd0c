#include "trigsum/numeric.hpp"

#include <cstdlib>

namespace trigsum {

long gcd(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

PrecisionContext make_context(long precision_bits) {
    if (precision_bits < 64)
        throw Error(ErrorKind::InvalidPrecision, "precision_bits must be >= 64");
    PrecisionContext ctx;
    ctx.precision_bits = static_cast<mpfr_prec_t>(precision_bits);
    ctx.tolerance = BigFloat::pow2(-(precision_bits - 32), ctx.precision_bits);
    return ctx;
}

PrecisionContext make_context_with_tolerance(long precision_bits, const BigFloat& tolerance) {
    if (precision_bits < 64)
        throw Error(ErrorKind::InvalidPrecision, "precision_bits must be >= 64");
    if (!(tolerance > BigFloat(0L, 64)))
        throw Error(ErrorKind::InvalidPrecision, "tolerance must be positive");
    PrecisionContext ctx;
    ctx.precision_bits = static_cast<mpfr_prec_t>(precision_bits);
    ctx.tolerance = tolerance;
    return ctx;
}

HighComplex operator/(const HighComplex& a, const HighComplex& b) {
    BigFloat norm = b.re() * b.re() + b.im() * b.im();
    if (norm.is_zero()) throw Error(ErrorKind::SingularTerm, "complex division by zero");
    HighComplex num = a * b.conj();
    return {num.re() / norm, num.im() / norm};
}

BigFloat HighComplex::abs() const {
    BigFloat r(re_.precision() > im_.precision() ? re_.precision() : im_.precision());
    mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
    return r;
}

HighComplex HighComplex::inverse() const {
    BigFloat norm = re_ * re_ + im_ * im_;
    if (norm.is_zero()) throw Error(ErrorKind::SingularTerm, "complex inverse of zero");
    return {re_ / norm, -im_ / norm};
}

HighComplex HighComplex::exp() const {
    BigFloat mag = re_.exp();
    auto [s, c] = im_.sin_cos();
    return {mag * c, mag * s};
}

HighComplex HighComplex::pow(unsigned long e) const {
    HighComplex r(1, re_.precision());
    HighComplex b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string HighComplex::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.str();
    s += (im_.sign() < 0) ? " - " : " + ";
    s += im_.abs().str();
    s += "i";
    return s;
}

namespace {

// theta = pi * r / den with r already reduced into [0, 2*den).
std::pair<BigFloat, BigFloat> sincos_reduced(const PrecisionContext& ctx, long r, long den) {
    BigFloat theta = BigFloat::pi(ctx.precision_bits) * r / den;
    return theta.sin_cos();
}

long reduce_mod(long num, long modulus) {
    long r = num % modulus;
    if (r < 0) r += modulus;
    return r;
}

}  // namespace

BigFloat sin_pi_frac(const PrecisionContext& ctx, long num, long den) {
    if (den == 0) throw Error(ErrorKind::InvalidModulus, "zero denominator in sin_pi_frac");
    if (den < 0) { den = -den; num = -num; }
    long r = reduce_mod(num, 2 * den);
    if (r % den == 0) return BigFloat(0L, ctx.precision_bits);
    return sincos_reduced(ctx, r, den).first;
}

BigFloat cos_pi_frac(const PrecisionContext& ctx, long num, long den) {
    if (den == 0) throw Error(ErrorKind::InvalidModulus, "zero denominator in cos_pi_frac");
    if (den < 0) { den = -den; num = -num; }
    long r = reduce_mod(num, 2 * den);
    long twice = 2 * r;
    if (twice % den == 0 && (twice / den) % 2 == 1) return BigFloat(0L, ctx.precision_bits);
    return sincos_reduced(ctx, r, den).second;
}

BigFloat cot_pi_frac(const PrecisionContext& ctx, long num, long den) {
    if (den == 0) throw Error(ErrorKind::InvalidModulus, "zero denominator in cot_pi_frac");
    if (den < 0) { den = -den; num = -num; }
    long r = reduce_mod(num, den);
    if (r == 0) throw Error(ErrorKind::SingularTerm, "cot at a multiple of pi");
    if (2 * r == den) return BigFloat(0L, ctx.precision_bits);
    auto [s, c] = sincos_reduced(ctx, r, den);
    return c / s;
}

HighComplex root_of_unity(const PrecisionContext& ctx, long k, long n) {
    if (k < 1) throw Error(ErrorKind::InvalidModulus, "root_of_unity requires k >= 1");
    long r = reduce_mod(n, k);
    if (r == 0) return HighComplex(1, ctx.precision_bits);
    // e^(2*pi*i*r/k) = cos(pi * 2r/k) + i sin(pi * 2r/k)
    BigFloat c = cos_pi_frac(ctx, 2 * r, k);
    BigFloat s = sin_pi_frac(ctx, 2 * r, k);
    return {std::move(c), std::move(s)};
}

std::vector<HighComplex> roots_of_unity(const PrecisionContext& ctx, long k) {
    if (k < 1) throw Error(ErrorKind::InvalidModulus, "roots_of_unity requires k >= 1");
    std::vector<HighComplex> out;
    out.reserve(static_cast<size_t>(k));
    for (long n = 1; n <= k; ++n) out.push_back(root_of_unity(ctx, k, n));
    return out;
}

bool approx_equal(const PrecisionContext& ctx, const BigFloat& a, const BigFloat& b) {
    BigFloat diff = (a - b).abs();
    BigFloat scale = b.abs();
    BigFloat one(1L, ctx.precision_bits);
    if (scale < one) scale = one;
    return diff <= ctx.tolerance * scale;
}

bool approx_equal(const PrecisionContext& ctx, const HighComplex& a, const HighComplex& b) {
    BigFloat diff = (a - b).abs();
    BigFloat scale = b.abs();
    BigFloat one(1L, ctx.precision_bits);
    if (scale < one) scale = one;
    return diff <= ctx.tolerance * scale;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    if (coeffs.empty())
        throw Error(ErrorKind::Usage, "eval_poly requires a nonempty coefficient list");
    Rational acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace trigsum

#include <doctest.h>

#include <mpfr.h>

#include "trigsum/numeric.hpp"
#include "trigsum/rootsums.hpp"
#include "trigsum/trigsums.hpp"

using namespace trigsum;

namespace {

// Test-local series oracle: cos and sin by Taylor expansion, using only
// +,-,*,/ so it is independent of mpfr_sin_cos.
std::pair<BigFloat, BigFloat> sincos_series(const BigFloat& x, mpfr_prec_t prec) {
    BigFloat sin_acc(0L, prec), cos_acc(0L, prec);
    BigFloat term(1L, prec);  // x^n / n!
    BigFloat cutoff = BigFloat::pow2(-static_cast<long>(prec) - 32, prec);
    long n = 0;
    while (term.abs() > cutoff) {
        switch (n % 4) {
            case 0: cos_acc += term; break;
            case 1: sin_acc += term; break;
            case 2: cos_acc -= term; break;
            case 3: sin_acc -= term; break;
        }
        ++n;
        term = term * x / n;
    }
    return {sin_acc, cos_acc};
}

}  // namespace

TEST_CASE("make_context tolerance policy") {
    PrecisionContext c256 = make_context(256);
    CHECK(c256.tolerance == BigFloat::pow2(-224, 256));
    PrecisionContext c64 = make_context(64);
    CHECK(c64.tolerance == BigFloat::pow2(-32, 64));
    CHECK_THROWS_AS(make_context(32), Error);
    try {
        make_context(32);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidPrecision);
    }
}

TEST_CASE("root_of_unity basic values") {
    PrecisionContext ctx = make_context(256);
    HighComplex i4 = root_of_unity(ctx, 4, 1);
    CHECK(i4.re().is_zero());
    CHECK(i4.im() == BigFloat(1L, 256));
    HighComplex one = root_of_unity(ctx, 1, 7);
    CHECK(one.re() == BigFloat(1L, 256));
    CHECK(one.im().is_zero());
    CHECK_THROWS_AS(root_of_unity(ctx, 0, 1), Error);
}

TEST_CASE("root_of_unity at k = 3 matches the series oracle") {
    PrecisionContext ctx = make_context(256);
    BigFloat theta = BigFloat::pi(300) * 2 / 3;
    auto [s, c] = sincos_series(theta, 300);
    HighComplex z = root_of_unity(ctx, 3, 1);
    CHECK((z.re() - c).abs() <= ctx.tolerance);
    CHECK((z.im() - s).abs() <= ctx.tolerance);
    // and the closed form -1/2 + (sqrt(3)/2) i
    CHECK((z.re() - BigFloat(Rational(-1, 2), 256)).abs() <= ctx.tolerance);
    BigFloat half_sqrt3 = BigFloat(3L, 256).sqrt() / 2;
    CHECK((z.im() - half_sqrt3).abs() <= ctx.tolerance);
}

TEST_CASE("approx_equal policy") {
    PrecisionContext ctx = make_context(256);
    HighComplex one(1, 256);
    CHECK(approx_equal(ctx, one, one));
    HighComplex tiny(BigFloat::pow2(-256, 256), BigFloat(0L, 256));
    CHECK(approx_equal(ctx, HighComplex(0, 256), tiny));
    HighComplex off(BigFloat(1L, 256) + BigFloat::pow2(-16, 256), BigFloat(0L, 256));
    CHECK_FALSE(approx_equal(ctx, off, one));
}

TEST_CASE("eval_poly") {
    Rational x5(5);
    std::vector<Rational> coeffs = {Rational(3), Rational(4), Rational(3), Rational(2)};
    CHECK(eval_poly(coeffs, x5) == Rational(348));
    CHECK(eval_poly({Rational(9, 7)}, Rational(123)) == Rational(9, 7));
    CHECK(eval_poly({Rational(0), Rational(1)}, Rational(7, 2)) == Rational(7, 2));
    CHECK_THROWS_AS(eval_poly({}, Rational(1)), Error);
}

TEST_CASE("roots of unity power and conjugate invariants") {
    PrecisionContext ctx = make_context(256);
    HighComplex one(1, 256);
    for (long k = 1; k <= 200; k += (k < 12 ? 1 : 17)) {
        auto roots = roots_of_unity(ctx, k);
        for (long n = 1; n <= k; ++n) {
            const HighComplex& z = roots[static_cast<size_t>(n - 1)];
            CHECK(approx_equal(ctx, z.pow(static_cast<unsigned long>(k)), one));
            HighComplex pair = z * root_of_unity(ctx, k, k - n);
            CHECK(approx_equal(ctx, pair, one));
        }
    }
}

TEST_CASE("rational to HighComplex round trip is exact for representable values") {
    PrecisionContext ctx = make_context(256);
    for (const Rational& r : {Rational(3, 8), Rational(-255, 64), Rational(1), Rational(0)}) {
        HighComplex c = HighComplex::from_rational(r, ctx.precision_bits);
        mpq_t back;
        mpq_init(back);
        mpfr_get_q(back, c.re().raw());
        CHECK(mpq_cmp(back, r.raw()) == 0);
        mpq_clear(back);
    }
}

TEST_CASE("sin_pi_frac and cot_pi_frac exact special values") {
    PrecisionContext ctx = make_context(256);
    CHECK(sin_pi_frac(ctx, 7, 7).is_zero());
    CHECK(sin_pi_frac(ctx, -3, 3).is_zero());
    CHECK(cos_pi_frac(ctx, 1, 2).is_zero());
    CHECK(cos_pi_frac(ctx, 3, 2).is_zero());
    CHECK(cot_pi_frac(ctx, 1, 2).is_zero());
    CHECK(cot_pi_frac(ctx, 5, 2).is_zero());
    CHECK_THROWS_AS(cot_pi_frac(ctx, 3, 3), Error);
    // sin(pi * 1/6) = 1/2 exactly to tolerance
    CHECK((sin_pi_frac(ctx, 1, 6) - BigFloat(Rational(1, 2), 256)).abs() <= ctx.tolerance);
}

TEST_CASE("doubling precision never flips a passing verdict") {
    PrecisionContext lo = make_context(256);
    PrecisionContext hi = make_context(512);
    for (long k : {5L, 7L, 13L}) {
        HighComplex brute_lo = trig_sum_bruteforce(lo, TrigFamily::COS2_OVER_COS4, k);
        HighComplex closed_lo =
            HighComplex::from_rational(trig_sum_closed(TrigFamily::COS2_OVER_COS4, k), 256);
        HighComplex brute_hi = trig_sum_bruteforce(hi, TrigFamily::COS2_OVER_COS4, k);
        HighComplex closed_hi =
            HighComplex::from_rational(trig_sum_closed(TrigFamily::COS2_OVER_COS4, k), 512);
        bool lo_pass = approx_equal(lo, brute_lo, closed_lo);
        bool hi_pass = approx_equal(hi, brute_hi, closed_hi);
        CHECK(lo_pass);
        CHECK((!lo_pass || hi_pass));
    }
    for (long k : {5L, 9L}) {
        PoleSpec spec{k, Pole::PlusI, 3, 0, SumRange::Full};
        bool lo_pass = approx_equal(
            lo, pole_sum_bruteforce(lo, spec),
            HighComplex::from_gaussian(pole_sum_closed(spec), 256));
        bool hi_pass = approx_equal(
            hi, pole_sum_bruteforce(hi, spec),
            HighComplex::from_gaussian(pole_sum_closed(spec), 512));
        CHECK(lo_pass);
        CHECK((!lo_pass || hi_pass));
    }
}

TEST_CASE("gaussian rational arithmetic closure") {
    GaussianRational a(Rational(3, 2), Rational(-1, 3));
    GaussianRational b(Rational(0), Rational(2));
    GaussianRational q = a / b;
    CHECK(q * b == a);
    CHECK((a - a).is_real());
    CHECK_THROWS_AS(a / GaussianRational(Rational(0), Rational(0)), Error);
}

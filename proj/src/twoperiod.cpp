#include "trigsum/twoperiod.hpp"

#include "trigsum/rootsums.hpp"

namespace trigsum {

namespace {
Rational R(long v) { return Rational(v); }
}

const char* two_period_kernel_name(TwoPeriodKernel k) {
    return k == TwoPeriodKernel::CSC2 ? "csc2" : "sec2";
}

void validate_two_period_spec(const TwoPeriodSpec& spec) {
    if (spec.p < 2 || spec.q < 2)
        throw Error(ErrorKind::HypothesisViolated, "two-period sum requires p, q >= 2");
    if (gcd(spec.p, spec.q) != 1)
        throw Error(ErrorKind::HypothesisViolated, "two-period sum requires gcd(p, q) = 1");
    if (spec.kernel == TwoPeriodKernel::SEC2 &&
        (spec.p % 2 == 0 || spec.q % 2 == 0 || spec.p < 3 || spec.q < 3))
        throw Error(ErrorKind::HypothesisViolated, "SEC2 kernel requires odd p, q >= 3");
}

HighComplex two_period_bruteforce(const PrecisionContext& ctx, const TwoPeriodSpec& spec) {
    validate_two_period_spec(spec);
    long p = spec.p, q = spec.q, pq = spec.p * spec.q;
    HighComplex acc(0, ctx.precision_bits);
    for (long n = 1; n <= pq - 1; ++n) {
        if (n % p == 0 || n % q == 0) continue;
        BigFloat ca = cot_pi_frac(ctx, n, p);
        BigFloat cb = cot_pi_frac(ctx, n, q);
        BigFloat den = (spec.kernel == TwoPeriodKernel::CSC2) ? sin_pi_frac(ctx, n, pq)
                                                              : cos_pi_frac(ctx, n, pq);
        acc += HighComplex(ca * cb / (den * den));
    }
    return acc;
}

HighComplex two_period_semiclosed(const PrecisionContext& ctx, const TwoPeriodSpec& spec) {
    validate_two_period_spec(spec);
    long p = spec.p, q = spec.q;
    if (spec.kernel == TwoPeriodKernel::CSC2) {
        Rational poly = (Rational::pow(R(p), 4) * Rational::pow(R(q), 3) -
                         R(5) * Rational::pow(R(p), 4) * R(q) + R(4) * Rational::pow(R(q), 3) -
                         R(5 * p * p) * Rational::pow(R(q), 3) + R(55 * p * p * q) + R(30 * p * p) -
                         R(50 * q) - R(30)) /
                        R(45 * p);
        HighComplex s1 = mixed_sum_bruteforce(ctx, q, p, RootSumShape::XiOver1Cu);
        HighComplex s2 = mixed_sum_bruteforce(ctx, q, p, RootSumShape::XiOver1SqPowSq);
        return HighComplex::from_rational(poly, ctx.precision_bits) +
               s1 * HighComplex::from_rational(R(32) / R(p), ctx.precision_bits) +
               s2 * HighComplex::from_rational(R(32 * q) / R(p), ctx.precision_bits);
    }
    Rational poly = R(2) * R(p * p - 1) * R(5 * q + 3) / R(3 * p);
    HighComplex s1 = mixed_sum_bruteforce(ctx, q, p, RootSumShape::XiOverP1Cu);
    HighComplex s2 = mixed_sum_bruteforce(ctx, q, p, RootSumShape::XiOverP1SqPowSq);
    return HighComplex::from_rational(poly, ctx.precision_bits) +
           s1 * HighComplex::from_rational(R(32) / R(p), ctx.precision_bits) -
           s2 * HighComplex::from_rational(R(32 * q) / R(p), ctx.precision_bits);
}

Rational two_period_closed_special(const TwoPeriodSpec& spec) {
    validate_two_period_spec(spec);
    long p = spec.p, q = spec.q;
    bool plus = (q % p) == (1 % p);
    bool minus = ((q + 1) % p) == 0;
    if (!plus && !minus)
        throw Error(ErrorKind::UnsupportedIdentity,
                    "closed special form requires q = +-1 (mod p); use the semi-closed path");
    if (spec.kernel == TwoPeriodKernel::CSC2) {
        if (plus) return R(p * p - 1) * R(p * p - 4) * R((q - 1) * (q - 1)) * R(q + 2) / R(45 * p);
        return R(p * p - 1) * R(p * p - 4) * R((q + 1) * (q + 1)) * R(q - 2) / R(45 * p);
    }
    if (plus) return R(2) * R(p * p - 1) * R(q - 1) / R(p);
    return R(2) * R(p * p - 1) * R(q + 1) / R(p);
}

}  // namespace trigsum

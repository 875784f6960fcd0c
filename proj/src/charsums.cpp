#include "trigsum/charsums.hpp"

#include <sstream>

namespace trigsum {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

HighComplex conj_value(const PrecisionContext& ctx, const DirichletCharacter& chi, long n) {
    if (!chi.is_unit(n)) return HighComplex(0, ctx.precision_bits);
    return root_of_unity(ctx, chi.order(), -chi.exponent(n));
}

// sin^a(b pi n / m) / sin^(a+1)(pi n / m)
BigFloat sin_power_ratio(const PrecisionContext& ctx, long n, long m, long a, long b) {
    BigFloat top = sin_pi_frac(ctx, b * n, m);
    BigFloat bot = sin_pi_frac(ctx, n, m);
    BigFloat tp(1L, ctx.precision_bits), bp(1L, ctx.precision_bits);
    for (long i = 0; i < a; ++i) tp *= top;
    for (long i = 0; i < a + 1; ++i) bp *= bot;
    return tp / bp;
}

long binom_long(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// sum_{m=0}^{a} (-1)^m binom(a, m) mu^(-step m)  ==  (1 - mu^(-step))^a
LaurentSeries sin_power_poly(long a, long step, mpfr_prec_t prec) {
    LaurentSeries s;
    long sign = 1;
    for (long m = 0; m <= a; ++m, sign = -sign)
        s.add_term(-step * m, HighComplex(sign * binom_long(a, m), prec));
    return s;
}

LaurentSeries char_poly(const PrecisionContext& ctx, const DirichletCharacter& chi, long step) {
    LaurentSeries s;
    long k = chi.modulus();
    for (long n = 1; n <= k - 1; ++n) {
        if (!chi.is_unit(n)) continue;
        s.add_term(step * n, chi.value(ctx, n));
    }
    return s;
}

}  // namespace

HighComplex gauss_sum(const PrecisionContext& ctx, const DirichletCharacter& chi,
                      const HighComplex& z) {
    long k = chi.modulus();
    bool integer_z = z.im().is_zero() && mpfr_integer_p(z.re().raw()) &&
                     mpfr_fits_slong_p(z.re().raw(), MPFR_RNDN);
    HighComplex acc(0, ctx.precision_bits);
    if (integer_z) {
        long m = mpfr_get_si(z.re().raw(), MPFR_RNDN);
        for (long n = 1; n <= k; ++n) {
            if (!chi.is_unit(n)) continue;
            acc += chi.value(ctx, n) * root_of_unity(ctx, k, n * m);
        }
        return acc;
    }
    BigFloat two_pi = BigFloat::pi(ctx.precision_bits) * 2;
    for (long n = 1; n <= k; ++n) {
        if (!chi.is_unit(n)) continue;
        // e^(2 pi i n z / k)
        BigFloat t = two_pi * n / k;
        HighComplex expo(-(z.im() * t), z.re() * t);
        acc += chi.value(ctx, n) * expo.exp();
    }
    return acc;
}

HighComplex gauss_sum(const PrecisionContext& ctx, const DirichletCharacter& chi) {
    return gauss_sum(ctx, chi, HighComplex(1, ctx.precision_bits));
}

CheckReport factorization_check(const PrecisionContext& ctx, const DirichletCharacter& chi, long n) {
    if (chi.is_principal())
        throw Error(ErrorKind::HypothesisViolated, "factorization requires non-principal chi");
    HighComplex lhs = gauss_sum(ctx, chi, HighComplex(n, ctx.precision_bits));
    HighComplex g = gauss_sum(ctx, chi);
    HighComplex stated = chi.value(ctx, n) * g;
    HighComplex conj_form = conj_value(ctx, chi, n) * g;
    bool stated_ok = approx_equal(ctx, lhs, stated);
    bool conj_ok = approx_equal(ctx, lhs, conj_form);
    std::string convention;
    if (stated_ok && conj_ok)
        convention = "both conventions agree (real or fixed-point value)";
    else if (stated_ok)
        convention = "stated convention chi(n) G(chi) holds";
    else if (conj_ok)
        convention = "conjugate convention conj(chi)(n) G(chi) holds";
    else
        convention = "neither convention holds";
    CheckReport r = CheckReport::numeric(
        ctx, "charsum.factorization",
        {{"k", param_str(chi.modulus())}, {"chi", std::to_string(chi.index())}, {"n", param_str(n)}},
        lhs, stated, convention);
    r.pass = stated_ok || conj_ok;
    return r;
}

const char* char_sum_variant_name(CharSumVariant v) {
    switch (v) {
        case CharSumVariant::SIN_RATIO: return "sin_ratio";
        case CharSumVariant::COS_RATIO: return "cos_ratio";
        case CharSumVariant::MULTI_SIN: return "multi_sin";
        case CharSumVariant::TWO_CHAR: return "two_char";
    }
    return "?";
}

void validate_char_sum_spec(const CharSumSpec& spec) {
    if (spec.chi1 == nullptr) throw Error(ErrorKind::Usage, "spec.chi1 is required");
    long p = spec.chi1->modulus();
    switch (spec.variant) {
        case CharSumVariant::SIN_RATIO:
        case CharSumVariant::COS_RATIO:
            if (spec.chi1->is_principal() || !spec.chi1->is_even())
                throw Error(ErrorKind::HypothesisViolated, "requires an even non-principal character");
            if (spec.a <= 1 || spec.a % 2 == 0)
                throw Error(ErrorKind::HypothesisViolated, "requires odd a > 1");
            if (!(spec.a - 3 < 2 * p))
                throw Error(ErrorKind::HypothesisViolated, "hypothesis a - 3 < 2p fails");
            if (spec.variant == CharSumVariant::COS_RATIO && p % 2 == 0)
                throw Error(ErrorKind::HypothesisViolated, "cos ratio requires odd modulus");
            break;
        case CharSumVariant::MULTI_SIN: {
            if (!is_prime(p))
                throw Error(ErrorKind::HypothesisViolated, "multi-sin requires prime modulus");
            if (spec.chi1->is_principal() || !spec.chi1->is_even())
                throw Error(ErrorKind::HypothesisViolated, "requires an even non-principal character");
            if (spec.a_list.empty())
                throw Error(ErrorKind::HypothesisViolated, "requires a nonempty a-list");
            long total = 0;
            for (long a : spec.a_list) {
                if (a <= 1 || a % 2 == 0)
                    throw Error(ErrorKind::HypothesisViolated, "every a_j must be odd and > 1");
                total += a;
            }
            long kk = static_cast<long>(spec.a_list.size());
            if (!(total - kk - 2 < 2 * p))
                throw Error(ErrorKind::HypothesisViolated,
                            "hypothesis a_1 + ... + a_k - k - 2 < 2p fails");
            break;
        }
        case CharSumVariant::TWO_CHAR: {
            if (spec.chi2 == nullptr) throw Error(ErrorKind::Usage, "spec.chi2 is required");
            long q = spec.chi2->modulus();
            if (gcd(p, q) != 1) throw Error(ErrorKind::Coprimality, "requires gcd(p, q) = 1");
            if (spec.chi1->is_principal() || spec.chi2->is_principal())
                throw Error(ErrorKind::HypothesisViolated, "requires non-principal characters");
            if (spec.a1 < 1 || spec.a1 % 2 == 0 || spec.a2 < 1 || spec.a2 % 2 == 0)
                throw Error(ErrorKind::HypothesisViolated, "a1, a2 must be odd positive");
            if (spec.b1 < 2 || spec.b1 % 2 == 1 || spec.b2 < 2 || spec.b2 % 2 == 1)
                throw Error(ErrorKind::HypothesisViolated, "b1, b2 must be even positive");
            if (!(q * (spec.a1 * spec.b1 - spec.a1 - 3) + p * (spec.a2 * spec.b2 - spec.a2 - 3) <
                  2 * p * q))
                throw Error(ErrorKind::HypothesisViolated,
                            "hypothesis q(a1 b1 - a1 - 3) + p(a2 b2 - a2 - 3) < 2pq fails");
            break;
        }
    }
}

HighComplex char_sum_bruteforce(const PrecisionContext& ctx, const CharSumSpec& spec) {
    validate_char_sum_spec(spec);
    const DirichletCharacter& chi = *spec.chi1;
    long p = chi.modulus();
    HighComplex acc(0, ctx.precision_bits);
    switch (spec.variant) {
        case CharSumVariant::SIN_RATIO:
            for (long n = 1; 2 * n < p; ++n) {
                if (!chi.is_unit(n)) continue;
                BigFloat ratio = sin_pi_frac(ctx, spec.a * n, p) / sin_pi_frac(ctx, n, p);
                acc += chi.value(ctx, n) * ratio;
            }
            return acc;
        case CharSumVariant::COS_RATIO:
            for (long n = 1; 2 * n < p; ++n) {
                if (!chi.is_unit(n)) continue;
                BigFloat ratio = cos_pi_frac(ctx, spec.a * n, p) / cos_pi_frac(ctx, n, p);
                acc += chi.value(ctx, n) * ratio;
            }
            return acc;
        case CharSumVariant::MULTI_SIN:
            for (long n = 1; 2 * n < p; ++n) {
                if (!chi.is_unit(n)) continue;
                BigFloat num(1L, ctx.precision_bits);
                for (long a : spec.a_list) num *= sin_pi_frac(ctx, a * n, p);
                BigFloat den(1L, ctx.precision_bits);
                BigFloat s = sin_pi_frac(ctx, n, p);
                for (size_t i = 0; i < spec.a_list.size(); ++i) den *= s;
                acc += chi.value(ctx, n) * (num / den);
            }
            return acc;
        case CharSumVariant::TWO_CHAR: {
            const DirichletCharacter& chi2 = *spec.chi2;
            long q = chi2.modulus();
            for (long n = 1; n <= p * q - 1; ++n) {
                if (n % p == 0 || n % q == 0) continue;
                BigFloat r1 = sin_power_ratio(ctx, n, p, spec.a1, spec.b1);
                BigFloat r2 = sin_power_ratio(ctx, n, q, spec.a2, spec.b2);
                acc += chi.value(ctx, n) * chi2.value(ctx, n) * (r1 * r2);
            }
            return acc;
        }
    }
    return acc;
}

namespace {

// C0 * G(chi) for the single-character ratio theorems, by constant-term
// extraction from the truncated Laurent product.
HighComplex ratio_constant_times_g(const PrecisionContext& ctx, const DirichletCharacter& chi,
                                   long a, bool cos_variant) {
    long p = chi.modulus();
    long floor = -(2 * (a - 1) + 2 * p + 4);
    std::vector<LaurentSeries> factors;
    factors.push_back(char_poly(ctx, chi, -2));
    factors.push_back(LaurentSeries::monomial(a - 1, HighComplex(1, ctx.precision_bits)));
    LaurentSeries beta;
    beta.add_term(0, HighComplex(1, ctx.precision_bits));
    beta.add_term(-2 * a, HighComplex(cos_variant ? 1 : -1, ctx.precision_bits));
    factors.push_back(beta);
    factors.push_back(cos_variant ? alternating_tail(2, floor, ctx.precision_bits)
                                  : geometric_tail(2, floor, ctx.precision_bits));
    return series_product_constant_term(factors, ctx.precision_bits);
}

HighComplex multi_sin_constant_times_g(const PrecisionContext& ctx, const DirichletCharacter& chi,
                                       const std::vector<long>& a_list) {
    long p = chi.modulus();
    long total = 0;
    for (long a : a_list) total += a;
    long k = static_cast<long>(a_list.size());
    long floor = -(2 * (total - k) + 2 * p + 4);
    std::vector<LaurentSeries> factors;
    factors.push_back(char_poly(ctx, chi, -2));
    factors.push_back(LaurentSeries::monomial(total - k, HighComplex(1, ctx.precision_bits)));
    for (long a : a_list) {
        LaurentSeries beta;
        beta.add_term(0, HighComplex(1, ctx.precision_bits));
        beta.add_term(-2 * a, HighComplex(-1, ctx.precision_bits));
        factors.push_back(beta);
    }
    factors.push_back(binomial_tail(k, 2, floor, ctx.precision_bits));
    return series_product_constant_term(factors, ctx.precision_bits);
}

// C0 (eq. 64 flavour when primed = false) and C0' (eq. 65) of the
// two-character theorem, including the +-4/(G1 G2) prefactors. chi1/chi2 are
// the characters whose Gauss sums appear in the integrand (the conjugates of
// the summation characters, so the factorization step holds as an identity).
HighComplex two_char_constant(const PrecisionContext& ctx, const CharSumSpec& spec, bool primed,
                              const HighComplex& g1, const HighComplex& g2,
                              const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
    long p = chi1.modulus(), q = chi2.modulus();
    long d1 = q * (spec.a1 * spec.b1 - spec.a1 - 1);
    long d2 = p * (spec.a2 * spec.b2 - spec.a2 - 1);
    long swing = d1 + d2 + 2 * q * (p - 1) + 2 * p * (q - 1) + 2 * p * q + 16;
    long floor = -swing;
    std::vector<LaurentSeries> factors;
    factors.push_back(LaurentSeries::monomial(d1, HighComplex(1, ctx.precision_bits)));
    factors.push_back(char_poly(ctx, chi1, primed ? 2 * q : -2 * q));
    factors.push_back(sin_power_poly(spec.a1, 2 * spec.b1 * q, ctx.precision_bits));
    factors.push_back(binomial_tail(spec.a1 + 1, 2 * q, floor, ctx.precision_bits));
    factors.push_back(LaurentSeries::monomial(d2, HighComplex(1, ctx.precision_bits)));
    factors.push_back(char_poly(ctx, chi2, primed ? 2 * p : -2 * p));
    factors.push_back(sin_power_poly(spec.a2, 2 * spec.b2 * p, ctx.precision_bits));
    factors.push_back(binomial_tail(spec.a2 + 1, 2 * p, floor, ctx.precision_bits));
    // the full geometric tail of 1/(e^{2 pi i z} - 1); on the lower edge the
    // product's exponents reach two tail steps, so one term is not enough
    if (primed) {
        LaurentSeries geom;
        for (long e = -2 * p * q; e >= floor; e -= 2 * p * q)
            geom.add_term(e, HighComplex(1, ctx.precision_bits));
        geom.set_floor(floor);
        factors.push_back(std::move(geom));
    } else {
        factors.push_back(geometric_tail(2 * p * q, floor, ctx.precision_bits));
    }
    HighComplex constant = series_product_constant_term(factors, ctx.precision_bits);
    HighComplex scaled = constant * 4 / (g1 * g2);
    return primed ? -scaled : scaled;
}

}  // namespace

HighComplex char_sum_closed(const PrecisionContext& ctx, const CharSumSpec& spec) {
    validate_char_sum_spec(spec);
    const DirichletCharacter& chi = *spec.chi1;
    long p = chi.modulus();
    // The contour integrand carries G(z, conj(chi)); its residues then
    // produce chi(n) itself via the factorization identity, which holds with
    // the conjugate character. For real characters this is the formula as
    // printed.
    DirichletCharacter cbar = chi.conjugate();
    switch (spec.variant) {
        case CharSumVariant::SIN_RATIO:
        case CharSumVariant::COS_RATIO: {
            HighComplex cg = ratio_constant_times_g(ctx, cbar, spec.a,
                                                    spec.variant == CharSumVariant::COS_RATIO);
            HighComplex g = gauss_sum(ctx, cbar);
            return cg * p / g;
        }
        case CharSumVariant::MULTI_SIN: {
            HighComplex cg = multi_sin_constant_times_g(ctx, cbar, spec.a_list);
            HighComplex g = gauss_sum(ctx, cbar);
            return cg * p / g;
        }
        case CharSumVariant::TWO_CHAR: {
            const DirichletCharacter& chi2 = *spec.chi2;
            long q = chi2.modulus();
            DirichletCharacter cbar2 = chi2.conjugate();
            HighComplex g1 = gauss_sum(ctx, cbar);
            HighComplex g2 = gauss_sum(ctx, cbar2);
            HighComplex c0 = two_char_constant(ctx, spec, false, g1, g2, cbar, cbar2);
            HighComplex c0p = two_char_constant(ctx, spec, true, g1, g2, cbar, cbar2);
            HighComplex m1 = char_moment_M(cbar).to_complex(ctx);
            HighComplex m2 = char_moment_M(cbar2).to_complex(ctx);
            long b1_pow = 1, b2_pow = 1;
            for (long i = 0; i < spec.a1; ++i) b1_pow *= spec.b1;
            for (long i = 0; i < spec.a2; ++i) b2_pow *= spec.b2;

            // boundary sums of the right side, by direct summation
            HighComplex bq(0, ctx.precision_bits);
            for (long n = 1; n <= q - 1; ++n) {
                if (!chi2.is_unit(n)) continue;
                bq += chi2.value(ctx, n) * sin_power_ratio(ctx, n * p, q, spec.a2, spec.b2);
            }
            HighComplex bp(0, ctx.precision_bits);
            for (long n = 1; n <= p - 1; ++n) {
                if (!chi.is_unit(n)) continue;
                bp += chi.value(ctx, n) * sin_power_ratio(ctx, n * q, p, spec.a1, spec.b1);
            }

            HighComplex two_i(BigFloat(0L, ctx.precision_bits), BigFloat(2L, ctx.precision_bits));
            HighComplex rhs = (c0p - c0) * (p * q);
            rhs += m1 * m2 / (g1 * g2) * (4 * b1_pow * b2_pow);
            rhs -= two_i * (m1 / g1) * chi2.value(ctx, p) * bq * b1_pow;
            rhs -= two_i * (m2 / g2) * chi.value(ctx, q) * bp * b2_pow;
            return rhs;
        }
    }
    throw Error(ErrorKind::UnsupportedIdentity, "unknown variant");
}

CheckReport char_sum_check(const PrecisionContext& ctx, const CharSumSpec& spec) {
    HighComplex lhs = char_sum_bruteforce(ctx, spec);
    HighComplex rhs = char_sum_closed(ctx, spec);
    std::vector<std::pair<std::string, std::string>> params = {
        {"p", param_str(spec.chi1->modulus())}, {"chi", std::to_string(spec.chi1->index())}};
    switch (spec.variant) {
        case CharSumVariant::SIN_RATIO:
        case CharSumVariant::COS_RATIO:
            params.emplace_back("a", param_str(spec.a));
            break;
        case CharSumVariant::MULTI_SIN: {
            std::ostringstream os;
            for (size_t i = 0; i < spec.a_list.size(); ++i)
                os << (i ? "," : "") << spec.a_list[i];
            params.emplace_back("a_list", os.str());
            break;
        }
        case CharSumVariant::TWO_CHAR:
            params.emplace_back("q", param_str(spec.chi2->modulus()));
            params.emplace_back("chi2", std::to_string(spec.chi2->index()));
            params.emplace_back("a1", param_str(spec.a1));
            params.emplace_back("a2", param_str(spec.a2));
            params.emplace_back("b1", param_str(spec.b1));
            params.emplace_back("b2", param_str(spec.b2));
            break;
    }
    return CheckReport::numeric(ctx, std::string("charsum.") + char_sum_variant_name(spec.variant),
                                params, lhs, rhs);
}

CheckReport example2_discrepancy_check(const PrecisionContext& ctx, const DirichletCharacter& chi,
                                       bool cos_variant) {
    CharSumSpec spec;
    spec.variant = cos_variant ? CharSumVariant::COS_RATIO : CharSumVariant::SIN_RATIO;
    spec.chi1 = &chi;
    spec.a = 5;
    HighComplex oracle = char_sum_bruteforce(ctx, spec);
    HighComplex formula_path = char_sum_closed(ctx, spec);

    // The worked example's claimed constant is chi(2) for both variants.
    long p = chi.modulus();
    HighComplex example_path =
        chi.value(ctx, 2) * HighComplex(p, ctx.precision_bits) / gauss_sum(ctx, chi);

    bool formula_ok = approx_equal(ctx, oracle, formula_path);
    bool example_ok = approx_equal(ctx, oracle, example_path);
    std::string verdict;
    if (formula_ok && !example_ok)
        verdict = "oracle matches the displayed constant-extraction formula; the worked a=5 "
                  "example's constant is not reproduced";
    else if (!formula_ok && example_ok)
        verdict = "oracle matches the worked a=5 example, not the displayed formula";
    else if (formula_ok && example_ok)
        verdict = "both candidates agree with the oracle";
    else
        verdict = "neither candidate matches the oracle";
    std::string note = "candidate[formula]=" + formula_path.str() +
                       "; candidate[example]=" + example_path.str() + "; oracle=" + oracle.str() +
                       "; " + verdict;
    CheckReport r = CheckReport::numeric(
        ctx, std::string("charsum.example2_discrepancy.") + (cos_variant ? "cos" : "sin"),
        {{"p", param_str(p)}, {"chi", std::to_string(chi.index())}}, oracle, formula_path, note);
    r.pass = formula_ok || example_ok;
    return r;
}

}  // namespace trigsum

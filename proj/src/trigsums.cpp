#include "trigsum/trigsums.hpp"

namespace trigsum {

namespace {

Rational R(long v) { return Rational(v); }

void require_admissible(TrigFamily f, long k) {
    if (k < 1) throw Error(ErrorKind::InvalidModulus, "trig family requires k >= 1");
    if (!trig_family_admissible(f, k))
        throw Error(ErrorKind::HypothesisViolated,
                    std::string(trig_family_name(f)) + " requires odd k, got k = " + std::to_string(k));
}

// Summand at index n, at context precision. Defined on the family's range.
HighComplex trig_term(const PrecisionContext& ctx, TrigFamily f, long k, long n) {
    auto hc = [&](BigFloat b) { return HighComplex(std::move(b)); };
    switch (f) {
        case TrigFamily::COS2_OVER_COS4: {
            BigFloat c1 = cos_pi_frac(ctx, n, k);
            BigFloat c2 = cos_pi_frac(ctx, 2 * n, k);
            return hc(c1 * c1 / (c2 * c2 * c2 * c2));
        }
        case TrigFamily::INV_COS4: {
            BigFloat c = cos_pi_frac(ctx, n, k);
            return hc(BigFloat(1L, ctx.precision_bits) / (c * c * c * c));
        }
        case TrigFamily::SIN2_OVER_COS4: {
            BigFloat s = sin_pi_frac(ctx, n, k);
            BigFloat c2 = cos_pi_frac(ctx, 2 * n, k);
            return hc(s * s / (c2 * c2 * c2 * c2));
        }
        case TrigFamily::SIN2_OVER_SIN4: {
            BigFloat s1 = sin_pi_frac(ctx, n, k);
            BigFloat s2 = sin_pi_frac(ctx, 2 * n, k);
            return hc(s1 * s1 / (s2 * s2 * s2 * s2));
        }
        case TrigFamily::INV_SIN4: {
            BigFloat s = sin_pi_frac(ctx, n, k);
            return hc(BigFloat(1L, ctx.precision_bits) / (s * s * s * s));
        }
        case TrigFamily::INV_SIN4_DOUBLE: {
            BigFloat s = sin_pi_frac(ctx, 2 * n, k);
            return hc(BigFloat(1L, ctx.precision_bits) / (s * s * s * s));
        }
        case TrigFamily::COS2_OVER_SIN4: {
            BigFloat c = cos_pi_frac(ctx, n, k);
            BigFloat s2 = sin_pi_frac(ctx, 2 * n, k);
            return hc(c * c / (s2 * s2 * s2 * s2));
        }
        case TrigFamily::INV_SIN2: {
            BigFloat s = sin_pi_frac(ctx, n, k);
            return hc(BigFloat(1L, ctx.precision_bits) / (s * s));
        }
        case TrigFamily::INV_COS2: {
            BigFloat c = cos_pi_frac(ctx, n, k);
            return hc(BigFloat(1L, ctx.precision_bits) / (c * c));
        }
        case TrigFamily::TAN2_SEC2: {
            BigFloat s = sin_pi_frac(ctx, n, k);
            BigFloat c = cos_pi_frac(ctx, n, k);
            return hc(s * s / (c * c * c * c));
        }
        case TrigFamily::COS2N_SEC4: {
            BigFloat c2 = cos_pi_frac(ctx, 2 * n, k);
            BigFloat c = cos_pi_frac(ctx, n, k);
            return hc(c2 / (c * c * c * c));
        }
        case TrigFamily::S3_COT2_CSC2: {
            BigFloat s = sin_pi_frac(ctx, n, k);
            BigFloat c = cos_pi_frac(ctx, n, k);
            return hc(c * c / (s * s * s * s));
        }
        case TrigFamily::S3_COT_COT2_CSC2: {
            BigFloat ct2 = cot_pi_frac(ctx, 2 * n, k);
            BigFloat ct1 = cot_pi_frac(ctx, n, k);
            BigFloat s = sin_pi_frac(ctx, n, k);
            return hc(ct2 * ct1 / (s * s));
        }
    }
    return HighComplex(0, ctx.precision_bits);
}

bool has_s3_prefactor(TrigFamily f) {
    return f == TrigFamily::S3_COT2_CSC2 || f == TrigFamily::S3_COT_COT2_CSC2;
}

}  // namespace

const char* trig_family_name(TrigFamily f) {
    switch (f) {
        case TrigFamily::COS2_OVER_COS4: return "cos2_over_cos4";
        case TrigFamily::INV_COS4: return "inv_cos4";
        case TrigFamily::SIN2_OVER_COS4: return "sin2_over_cos4";
        case TrigFamily::SIN2_OVER_SIN4: return "sin2_over_sin4";
        case TrigFamily::INV_SIN4: return "inv_sin4";
        case TrigFamily::INV_SIN4_DOUBLE: return "inv_sin4_double";
        case TrigFamily::COS2_OVER_SIN4: return "cos2_over_sin4";
        case TrigFamily::INV_SIN2: return "inv_sin2";
        case TrigFamily::INV_COS2: return "inv_cos2";
        case TrigFamily::TAN2_SEC2: return "tan2_sec2";
        case TrigFamily::COS2N_SEC4: return "cos2n_sec4";
        case TrigFamily::S3_COT2_CSC2: return "s3_cot2_csc2";
        case TrigFamily::S3_COT_COT2_CSC2: return "s3_cot_cot2_csc2";
    }
    return "?";
}

const std::vector<TrigFamily>& all_trig_families() {
    static const std::vector<TrigFamily> fams = {
        TrigFamily::COS2_OVER_COS4,   TrigFamily::INV_COS4,       TrigFamily::SIN2_OVER_COS4,
        TrigFamily::SIN2_OVER_SIN4,   TrigFamily::INV_SIN4,       TrigFamily::INV_SIN4_DOUBLE,
        TrigFamily::COS2_OVER_SIN4,   TrigFamily::INV_SIN2,       TrigFamily::INV_COS2,
        TrigFamily::TAN2_SEC2,        TrigFamily::COS2N_SEC4,     TrigFamily::S3_COT2_CSC2,
        TrigFamily::S3_COT_COT2_CSC2,
    };
    return fams;
}

bool trig_family_admissible(TrigFamily f, long k) {
    if (k < 1) return false;
    switch (f) {
        case TrigFamily::INV_SIN4:
        case TrigFamily::INV_SIN2: return true;
        default: return k % 2 == 1;
    }
}

bool trig_family_runs_to_k(TrigFamily f) {
    switch (f) {
        case TrigFamily::COS2_OVER_COS4:
        case TrigFamily::INV_COS4:
        case TrigFamily::SIN2_OVER_COS4:
        case TrigFamily::INV_COS2:
        case TrigFamily::TAN2_SEC2:
        case TrigFamily::COS2N_SEC4: return true;
        default: return false;
    }
}

HighComplex trig_sum_bruteforce(const PrecisionContext& ctx, TrigFamily f, long k) {
    require_admissible(f, k);
    long hi = trig_family_runs_to_k(f) ? k : k - 1;
    HighComplex acc(0, ctx.precision_bits);
    for (long n = 1; n <= hi; ++n) acc += trig_term(ctx, f, k, n);
    if (has_s3_prefactor(f))
        acc = acc * HighComplex::from_rational(R(-3) / R(8 * k * k * k), ctx.precision_bits);
    return acc;
}

Rational trig_sum_closed(TrigFamily f, long k) {
    return trig_sum_closed_branch(f, k, k % 4 == 1);
}

Rational trig_sum_closed_branch(TrigFamily f, long k, bool k1_branch) {
    require_admissible(f, k);
    Rational K(k);
    switch (f) {
        case TrigFamily::COS2_OVER_COS4:
            return k1_branch ? K * R(3 + 4 * k + 3 * k * k + 2 * k * k * k) / R(12)
                             : K * R(-3 + 4 * k - 3 * k * k + 2 * k * k * k) / R(12);
        case TrigFamily::INV_COS4: return R(k * k) * R(k * k + 2) / R(3);
        case TrigFamily::SIN2_OVER_COS4:
            // inv_cos4 minus cos2_over_cos4, stated per mod-4 branch in the paper
            return k1_branch
                       ? Rational::pow(K, 4) / R(6) - Rational::pow(K, 3) / R(4) + K * K / R(3) - K / R(4)
                       : Rational::pow(K, 4) / R(6) + Rational::pow(K, 3) / R(4) + K * K / R(3) + K / R(4);
        case TrigFamily::SIN2_OVER_SIN4:
            return (Rational::pow(K, 4) + R(6) * K * K - R(7)) / R(48);
        case TrigFamily::INV_SIN4:
            return (Rational::pow(K, 4) + R(10) * K * K - R(11)) / R(45);
        case TrigFamily::INV_SIN4_DOUBLE:
            return (Rational::pow(K, 4) + R(10) * K * K - R(11)) / R(45);
        case TrigFamily::COS2_OVER_SIN4:
            return (Rational::pow(K, 4) + R(70) * K * K - R(71)) / R(720);
        case TrigFamily::INV_SIN2: return (K * K - R(1)) / R(3);
        case TrigFamily::INV_COS2: return K * K;
        case TrigFamily::TAN2_SEC2: return K * K * (K * K - R(1)) / R(3);
        case TrigFamily::COS2N_SEC4: return -(K * K) * (K * K - R(4)) / R(3);
        case TrigFamily::S3_COT2_CSC2:
            return -((K * K - R(1)) * (K * K - R(4))) / (R(120) * K * K * K);
        case TrigFamily::S3_COT_COT2_CSC2:
            return -((K * K - R(1)) * (K * K - R(19))) / (R(240) * K * K * K);
    }
    throw Error(ErrorKind::UnsupportedIdentity, "unknown trig family");
}

CheckReport half_range_relation_check(const PrecisionContext& ctx, TrigFamily f, long k) {
    require_admissible(f, k);
    long hi = trig_family_runs_to_k(f) ? k : k - 1;
    HighComplex half(0, ctx.precision_bits);
    for (long n = 1; 2 * n < k; ++n) half += trig_term(ctx, f, k, n);
    HighComplex rhs = half * 2;
    if (k % 2 == 0 && hi >= k / 2) rhs += trig_term(ctx, f, k, k / 2);
    if (hi == k) rhs += trig_term(ctx, f, k, k);
    if (has_s3_prefactor(f))
        rhs = rhs * HighComplex::from_rational(R(-3) / R(8 * k * k * k), ctx.precision_bits);
    HighComplex full = trig_sum_bruteforce(ctx, f, k);
    return CheckReport::numeric(ctx, std::string("trig.half_range.") + trig_family_name(f),
                                {{"k", param_str(k)}}, full, rhs);
}

CheckReport triangular_identity_check(long m) {
    if (m < 1) throw Error(ErrorKind::InvalidModulus, "triangular identity requires m >= 1");
    long k = 2 * m + 1;
    // Half of the full-range closed form: the summand is symmetric and k odd.
    Rational lhs = trig_sum_closed(TrigFamily::SIN2_OVER_SIN4, k) / R(2);
    Rational t = R(m) * R(m + 1) / R(2);
    Rational tt = t * (t + R(1)) / R(2);
    Rational rhs = R(4) * tt / R(3);
    return CheckReport::exact_rational("trig.triangular_identity", {{"m", param_str(m)}}, lhs, rhs);
}

HighComplex half_range_power_sum(const PrecisionContext& ctx, bool sin_kind, long k, int a) {
    if (k < 1 || k % 2 == 0)
        throw Error(ErrorKind::HypothesisViolated, "half-range power sum requires odd k");
    if (a < 1) throw Error(ErrorKind::HypothesisViolated, "requires a >= 1");
    HighComplex acc(0, ctx.precision_bits);
    for (long n = 1; 2 * n < k; ++n) {
        BigFloat top = sin_kind ? sin_pi_frac(ctx, n, k) : cos_pi_frac(ctx, n, k);
        BigFloat bot = sin_kind ? sin_pi_frac(ctx, 2 * n, k) : cos_pi_frac(ctx, 2 * n, k);
        BigFloat tp(1L, ctx.precision_bits), bp(1L, ctx.precision_bits);
        for (int i = 0; i < 2 * a; ++i) tp *= top;
        for (int i = 0; i < 2 * a + 2; ++i) bp *= bot;
        acc += HighComplex(tp / bp);
    }
    return acc;
}

}  // namespace trigsum

#include "trigsum/rootsums.hpp"

#include <utility>

namespace trigsum {

namespace {

// z_m for any integer m (z_0 = z_k = 1); roots holds z_1..z_k.
const HighComplex& root_at(const std::vector<HighComplex>& roots, long m) {
    long k = static_cast<long>(roots.size());
    long r = m % k;
    if (r < 0) r += k;
    return roots[r == 0 ? static_cast<size_t>(k - 1) : static_cast<size_t>(r - 1)];
}

// Location of the summand's pole: the denominators are (z-1), (z+1), (z+i),
// (z-i) for PlusOne, MinusOne, PlusI, MinusI respectively (the +-i labels
// follow the sign written in the lemmas, so PlusI sits at -i).
HighComplex pole_value(const PrecisionContext& ctx, Pole p) {
    switch (p) {
        case Pole::PlusOne: return HighComplex(1, ctx.precision_bits);
        case Pole::MinusOne: return HighComplex(-1, ctx.precision_bits);
        case Pole::PlusI: return -HighComplex::i(ctx.precision_bits);
        case Pole::MinusI: return HighComplex::i(ctx.precision_bits);
    }
    return HighComplex(0, ctx.precision_bits);
}

// Index n in 1..k with z_n equal to the pole location, or 0 when the pole is
// not a k-th root.
long pole_root_index(long k, Pole p) {
    switch (p) {
        case Pole::PlusOne: return k;
        case Pole::MinusOne: return (k % 2 == 0) ? k / 2 : 0;
        case Pole::PlusI: return (k % 4 == 0) ? 3 * k / 4 : 0;
        case Pole::MinusI: return (k % 4 == 0) ? k / 4 : 0;
    }
    return 0;
}

Rational R(long v) { return Rational(v); }

GaussianRational gr(long v) { return GaussianRational(v); }

void validate_pole_spec(const PoleSpec& s) {
    if (s.k < 1) throw Error(ErrorKind::InvalidModulus, "pole sum requires k >= 1");
    if (s.m < 1 || s.m > 4) throw Error(ErrorKind::UnsupportedIdentity, "pole order m must be 1..4");
    if (s.a < 0 || s.a > 4 || s.a > s.m)
        throw Error(ErrorKind::UnsupportedIdentity, "numerator power a must satisfy 0 <= a <= m");
}

}  // namespace

const char* pole_name(Pole p) {
    switch (p) {
        case Pole::PlusOne: return "+1";
        case Pole::MinusOne: return "-1";
        case Pole::PlusI: return "+i";
        case Pole::MinusI: return "-i";
    }
    return "?";
}

const char* range_name(SumRange r) { return r == SumRange::Full ? "full" : "omit_pole"; }

HighComplex pole_sum_bruteforce(const PrecisionContext& ctx, const PoleSpec& spec) {
    validate_pole_spec(spec);
    long hi = (spec.range == SumRange::Full) ? spec.k : spec.k - 1;
    long bad = pole_root_index(spec.k, spec.pole);
    if (bad != 0 && bad <= hi)
        throw Error(ErrorKind::SingularTerm,
                    std::string("pole ") + pole_name(spec.pole) + " coincides with summed root z_" +
                        std::to_string(bad));
    auto roots = roots_of_unity(ctx, spec.k);
    HighComplex p = pole_value(ctx, spec.pole);
    HighComplex acc(0, ctx.precision_bits);
    for (long n = 1; n <= hi; ++n) {
        const HighComplex& z = roots[static_cast<size_t>(n - 1)];
        HighComplex den = (z - p).pow(static_cast<unsigned long>(spec.m));
        HighComplex num = (spec.a == 0) ? HighComplex(1, ctx.precision_bits)
                                        : z.pow(static_cast<unsigned long>(spec.a));
        acc += num / den;
    }
    return acc;
}

namespace {

// Lemma table for pole +1 (denominators (z-1)^m), range 1..k-1, any k >= 1.
GaussianRational closed_pole_plus_one(long k, int a, int m) {
    Rational km1(k - 1);
    switch (m * 10 + a) {
        case 10: return {R(-(k - 1)) / R(2), R(0)};
        case 11: return {R(k - 1) / R(2), R(0)};
        case 20: return {R(-(k - 1) * (k - 5)) / R(12), R(0)};
        case 21: return {R(-(k - 1) * (k + 1)) / R(12), R(0)};
        case 22: return {R(-(k - 1) * (k - 5)) / R(12), R(0)};
        case 30: return {R((k - 1) * (k - 3)) / R(8), R(0)};
        case 31: return {R((k - 1) * (k + 1)) / R(24), R(0)};
        case 32: return {R(-(k - 1) * (k + 1)) / R(24), R(0)};
        case 33: return {R(-(k - 1) * (k - 3)) / R(8), R(0)};
        case 40: return {R(k - 1) * R(k * k * k + k * k - 109 * k + 251) / R(720), R(0)};
        case 41: return {R((k - 1) * (k + 1)) * R(k * k - 19) / R(720), R(0)};
        case 42: return {R((k - 1) * (k + 1)) * R(k * k + 11) / R(720), R(0)};
        case 43: return {R((k - 1) * (k + 1)) * R(k * k - 19) / R(720), R(0)};
        case 44: return {R(k - 1) * R(k * k * k + k * k - 109 * k + 251) / R(720), R(0)};
        default:
            throw Error(ErrorKind::UnsupportedIdentity, "(a,m) combination not tabulated for pole +1");
    }
}

// Lemma table for pole -1 (denominators (z+1)^m), range 1..k-1, k odd.
GaussianRational closed_pole_minus_one(long k, int a, int m) {
    switch (m * 10 + a) {
        case 10: return {R(k - 1) / R(2), R(0)};
        case 11: return {R(k - 1) / R(2), R(0)};
        case 20: return {R(-(k - 1) * (k - 1)) / R(4), R(0)};
        case 21: return {R(k * k - 1) / R(4), R(0)};
        case 22: return {R(-(k - 1) * (k - 1)) / R(4), R(0)};
        case 30: return {R(-(k - 1) * (3 * k - 1)) / R(8), R(0)};
        case 31: return {R(k * k - 1) / R(8), R(0)};
        case 32: return {R(k * k - 1) / R(8), R(0)};
        case 33: return {R(-(k - 1) * (3 * k - 1)) / R(8), R(0)};
        case 40: return {R(k - 1) * R(k * k * k + k * k - 21 * k + 3) / R(48), R(0)};
        case 41: return {R(-(k * k - 1)) * R(k * k - 3) / R(48), R(0)};
        case 42: return {R(k * k - 1) * R(k * k + 3) / R(48), R(0)};
        case 43: return {R(-(k * k - 1)) * R(k * k - 3) / R(48), R(0)};
        case 44: return {R(k - 1) * R(k * k * k + k * k - 21 * k + 3) / R(48), R(0)};
        default:
            throw Error(ErrorKind::UnsupportedIdentity, "(a,m) combination not tabulated for pole -1");
    }
}

// Lemma table for poles +-i, full range 1..k, k odd, a = 0, with the
// k = 1 vs 3 (mod 4) branch.
GaussianRational closed_pole_imaginary(long k, int m, int s, bool k1_branch) {
    GaussianRational i = GaussianRational::i();
    GaussianRational S = gr(s);
    if (k1_branch) {
        GaussianRational d = i + S;  // i +- 1
        switch (m) {
            case 1: return S * gr(k) / d;
            case 2: return gr(k * (k - 1)) * i / d - S * gr(k * k) * i / gr(2);
            case 3:
                return (gr(-s * k * (k - 1) * (k - 2)) - gr(k * k * k) * i) / (gr(2) * d) +
                       gr(3 * k * k * (k - 1)) / gr(4);
            case 4:
                return gr(-(k - 1) * (k - 2) * (k - 3)) * gr(k) * i / (gr(6) * d) +
                       S * gr(k * k * k * (k - 1)) / d +
                       S * gr(k * k * (k - 1)) * gr(7 * k - 11) * i / gr(12) - gr(k * k) * gr(k * k) / gr(4);
        }
    } else {
        GaussianRational d = i - S;  // i -+ 1
        switch (m) {
            case 1: return S * gr(k) / d;
            case 2: return gr(k * (k - 1)) * i / d + S * gr(k * k) * i / gr(2);
            case 3:
                return (gr(-s * k * (k - 1) * (k - 2)) + gr(k * k * k) * i) / (gr(2) * d) -
                       gr(3 * k * k * (k - 1)) / gr(4);
            case 4:
                return gr(-(k - 1) * (k - 2) * (k - 3)) * gr(k) * i / (gr(6) * d) -
                       S * gr(k * k * k * (k - 1)) / d -
                       S * gr(k * k * (k - 1)) * gr(7 * k - 11) * i / gr(12) - gr(k * k) * gr(k * k) / gr(4);
        }
    }
    throw Error(ErrorKind::UnsupportedIdentity, "pole order m must be 1..4");
}

}  // namespace

GaussianRational pole_sum_closed(const PoleSpec& spec) {
    validate_pole_spec(spec);
    long k = spec.k;
    switch (spec.pole) {
        case Pole::PlusOne:
            if (spec.range != SumRange::OmitPole)
                throw Error(ErrorKind::UnsupportedIdentity,
                            "pole +1 closed forms are tabulated for the omit-pole range only");
            return closed_pole_plus_one(k, spec.a, spec.m);
        case Pole::MinusOne:
            if (k % 2 == 0)
                throw Error(ErrorKind::HypothesisViolated, "pole -1 closed forms require odd k");
            if (spec.range != SumRange::OmitPole)
                throw Error(ErrorKind::UnsupportedIdentity,
                            "pole -1 closed forms are tabulated for the 1..k-1 range only");
            return closed_pole_minus_one(k, spec.a, spec.m);
        case Pole::PlusI:
        case Pole::MinusI:
            if (k % 2 == 0)
                throw Error(ErrorKind::HypothesisViolated, "pole +-i closed forms require odd k");
            if (spec.a != 0 || spec.range != SumRange::Full)
                throw Error(ErrorKind::UnsupportedIdentity,
                            "pole +-i closed forms are tabulated for a = 0, full range only");
            return closed_pole_imaginary(k, spec.m, spec.pole == Pole::PlusI ? 1 : -1, k % 4 == 1);
    }
    throw Error(ErrorKind::UnsupportedIdentity, "unknown pole");
}

GaussianRational pole_sum_closed_imaginary_branch(const PoleSpec& spec, bool k1_branch) {
    validate_pole_spec(spec);
    if (spec.pole != Pole::PlusI && spec.pole != Pole::MinusI)
        throw Error(ErrorKind::UnsupportedIdentity, "branch selection applies to poles +-i only");
    if (spec.k % 2 == 0) throw Error(ErrorKind::HypothesisViolated, "requires odd k");
    return closed_pole_imaginary(spec.k, spec.m, spec.pole == Pole::PlusI ? 1 : -1, k1_branch);
}

std::vector<PoleSpec> tabulated_pole_specs(long k) {
    std::vector<PoleSpec> out;
    // (z-1)^m table: any k.
    static const int pairs[][2] = {{0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}, {0, 3}, {1, 3},
                                   {2, 3}, {3, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 4}};
    for (auto& am : pairs)
        out.push_back({k, Pole::PlusOne, am[1], am[0], SumRange::OmitPole});
    if (k % 2 == 1) {
        for (auto& am : pairs)
            out.push_back({k, Pole::MinusOne, am[1], am[0], SumRange::OmitPole});
        for (int m = 1; m <= 4; ++m) {
            out.push_back({k, Pole::PlusI, m, 0, SumRange::Full});
            out.push_back({k, Pole::MinusI, m, 0, SumRange::Full});
        }
    }
    return out;
}

HighComplex mixed_sum_bruteforce(const PrecisionContext& ctx, long p, long q, RootSumShape shape) {
    if (q < 2) throw Error(ErrorKind::InvalidModulus, "mixed sum requires q >= 2");
    if (p < 1) throw Error(ErrorKind::InvalidModulus, "mixed sum requires p >= 1");
    if (gcd(p, q) != 1) throw Error(ErrorKind::Coprimality, "mixed sum requires gcd(p, q) = 1");
    bool plus_one_pole = shape == RootSumShape::XiOverP1Sq || shape == RootSumShape::XiOverP1Cu ||
                         shape == RootSumShape::XiOverP1SqPowSq || shape == RootSumShape::InvOverP1 ||
                         shape == RootSumShape::InvOverP1Sq || shape == RootSumShape::XiOverSqM1;
    if (plus_one_pole && q % 2 == 0)
        throw Error(ErrorKind::HypothesisViolated, "shape with (xi+1) denominator requires odd q");

    auto roots = roots_of_unity(ctx, q);
    HighComplex one(1, ctx.precision_bits);
    HighComplex acc(0, ctx.precision_bits);
    for (long j = 1; j <= q - 1; ++j) {
        const HighComplex& xi = roots[static_cast<size_t>(j - 1)];
        const HighComplex& xip = root_at(roots, j * p);
        HighComplex dm = xi - one;
        HighComplex dp = xi + one;
        HighComplex pw = xip - one;
        HighComplex term(0, ctx.precision_bits);
        switch (shape) {
            case RootSumShape::XiOver1Sq: term = xi / (dm.pow(2) * pw); break;
            case RootSumShape::XiOver1Cu: term = xi / (dm.pow(3) * pw); break;
            case RootSumShape::XiOver1SqPowSq: term = xi / (dm.pow(2) * pw.pow(2)); break;
            case RootSumShape::XiOverP1Sq: term = xi / (dp.pow(2) * pw); break;
            case RootSumShape::XiOverP1Cu: term = xi / (dp.pow(3) * pw); break;
            case RootSumShape::XiOverP1SqPowSq: term = xi / (dp.pow(2) * pw.pow(2)); break;
            case RootSumShape::InvOver1: term = (dm * pw).inverse(); break;
            case RootSumShape::InvOver1Sq: term = (dm.pow(2) * pw).inverse(); break;
            case RootSumShape::InvOver1Cu: term = (dm.pow(3) * pw).inverse(); break;
            case RootSumShape::InvOverP1: term = (dp * pw).inverse(); break;
            case RootSumShape::InvOverP1Sq: term = (dp.pow(2) * pw).inverse(); break;
            case RootSumShape::XiOverSqM1: term = xi / (dm * dp * pw); break;
        }
        acc += term;
    }
    return acc;
}

const char* mixed_identity_name(MixedIdentityId id) {
    switch (id) {
        case MixedIdentityId::LEMR1: return "LEMR1";
        case MixedIdentityId::LEMR2: return "LEMR2";
        case MixedIdentityId::LEMR4: return "LEMR4";
        case MixedIdentityId::LEMR21: return "LEMR21";
        case MixedIdentityId::LEMR22: return "LEMR22";
        case MixedIdentityId::LEMR21P: return "LEMR21P";
        case MixedIdentityId::LEMR23: return "LEMR23";
        case MixedIdentityId::LEMR24: return "LEMR24";
        case MixedIdentityId::LEMR1_1: return "LEMR1_1";
        case MixedIdentityId::LEMR2_1: return "LEMR2_1";
    }
    return "?";
}

bool mixed_identity_admissible(long p, long q, MixedIdentityId id, std::string* why) {
    auto fail = [&](const char* reason) {
        if (why) *why = reason;
        return false;
    };
    if (gcd(p, q) != 1) throw Error(ErrorKind::Coprimality, "mixed identity requires gcd(p, q) = 1");
    switch (id) {
        case MixedIdentityId::LEMR1:
            if (p < 1 || q < 2) return fail("requires p >= 1 and q >= 2");
            return true;
        case MixedIdentityId::LEMR21:
            if (p < 1 || q < 3) return fail("requires p >= 1 and q >= 3");
            if (q % 2 == 0) return fail("requires odd q");
            return true;
        case MixedIdentityId::LEMR2:
        case MixedIdentityId::LEMR4:
        case MixedIdentityId::LEMR22:
        case MixedIdentityId::LEMR1_1:
        case MixedIdentityId::LEMR2_1:
            if (p < 2 || q < 2) return fail("requires p, q >= 2");
            return true;
        case MixedIdentityId::LEMR21P:
            if (p < 2 || q < 2) return fail("requires p, q >= 2");
            if (p % 2 == 0 || q % 2 == 0) return fail("requires odd p and q");
            return true;
        case MixedIdentityId::LEMR23:
        case MixedIdentityId::LEMR24:
            if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0) return fail("requires odd p, q >= 3");
            return true;
    }
    return fail("unknown identity");
}

CheckReport mixed_identity_check(const PrecisionContext& ctx, long p, long q, MixedIdentityId id) {
    std::string why;
    if (!mixed_identity_admissible(p, q, id, &why))
        throw Error(ErrorKind::HypothesisViolated,
                    std::string(mixed_identity_name(id)) + ": " + why);

    auto sum = [&](long mod, long pw, RootSumShape shape) {
        return mixed_sum_bruteforce(ctx, pw, mod, shape);
    };
    std::vector<std::pair<std::string, std::string>> params = {{"p", param_str(p)}, {"q", param_str(q)}};
    std::string tag = std::string("rootsum.mixed.") + mixed_identity_name(id);
    auto from_rational = [&](const Rational& r) { return HighComplex::from_rational(r, ctx.precision_bits); };

    HighComplex lhs(0, ctx.precision_bits);
    HighComplex rhs(0, ctx.precision_bits);
    switch (id) {
        case MixedIdentityId::LEMR1:
            lhs = sum(q, p, RootSumShape::XiOver1Sq);
            rhs = from_rational(R(q * q - 1) / R(24));
            break;
        case MixedIdentityId::LEMR2:
            lhs = sum(q, p, RootSumShape::XiOver1Cu) * p + sum(p, q, RootSumShape::XiOver1Cu) * q;
            rhs = from_rational((Rational::pow(R(p), 4) + Rational::pow(R(q), 4) -
                                 R(5 * p * p * q * q) - R(15 * p * p * q) - R(15 * p * q * q) +
                                 R(15 * p + 15 * q + 3)) /
                                R(720));
            break;
        case MixedIdentityId::LEMR4:
            lhs = sum(q, p, RootSumShape::XiOver1SqPowSq) * (p * p) -
                  sum(p, q, RootSumShape::XiOver1SqPowSq) * (q * q);
            rhs = from_rational(-(R(3) * Rational::pow(R(p), 4) - Rational::pow(R(q), 4) -
                                  R(25 * p * p) + R(25 * q * q) - R(5 * p * p * q * q) -
                                  R(30 * p * p * q) + R(30 * q + 3)) /
                                R(720)) +
                  sum(p, q, RootSumShape::XiOver1Cu) * (2 * q);
            break;
        case MixedIdentityId::LEMR21:
            lhs = sum(q, p, RootSumShape::XiOverP1Sq);
            rhs = from_rational(R(-(q * q - 1)) / R(8));
            break;
        case MixedIdentityId::LEMR22:
            lhs = sum(p, q, RootSumShape::InvOver1) * q + sum(q, p, RootSumShape::InvOver1) * p;
            rhs = from_rational(-(R(p * p + q * q - 9 * p * q + 3 * p + 3 * q + 1)) / R(12));
            break;
        case MixedIdentityId::LEMR21P:
            lhs = sum(p, q, RootSumShape::InvOverP1) * q + sum(q, p, RootSumShape::InvOverP1) * p;
            rhs = from_rational(-(R(3 * p * q - p - q - 1)) / R(4));
            break;
        case MixedIdentityId::LEMR23:
            lhs = sum(p, q, RootSumShape::InvOverP1Sq) * q + sum(q, p, RootSumShape::InvOverP1Sq) * p;
            rhs = from_rational(R(p * p * q + p * q * q + p + q - 6 * p * q + 2) / R(8));
            break;
        case MixedIdentityId::LEMR24:
            lhs = sum(p, q, RootSumShape::XiOverP1SqPowSq) * (q * q) -
                  sum(q, p, RootSumShape::XiOverP1SqPowSq) * (p * p);
            rhs = from_rational(R(3 * p * p * q * q + 6 * p * p * q + 5 * p * p - 5 * q * q - 6 * q - 3) /
                                R(48)) +
                  sum(p, q, RootSumShape::XiOverP1Cu) * (2 * q);
            break;
        case MixedIdentityId::LEMR1_1:
            lhs = sum(q, p, RootSumShape::InvOver1Sq) * p + sum(p, q, RootSumShape::InvOver1Sq) * q;
            rhs = from_rational(R(p * p * q + p * q * q + 2 * p * p + 2 * q * q - 18 * p * q +
                                  5 * p + 5 * q + 2) /
                                R(24));
            break;
        case MixedIdentityId::LEMR2_1:
            lhs = sum(q, p, RootSumShape::InvOver1Cu) * p + sum(p, q, RootSumShape::InvOver1Cu) * q;
            rhs = from_rational((Rational::pow(R(p), 4) + Rational::pow(R(q), 4) -
                                 R(5 * p * p * q * q) - R(45 * p * p * q) - R(45 * p * q * q) -
                                 R(60 * p * p) - R(60 * q * q) + R(540 * p * q) -
                                 R(135 * p + 135 * q + 57)) /
                                R(720));
            break;
    }
    return CheckReport::numeric(ctx, tag, params, lhs, rhs);
}

const char* decomp_name(DecompId id) {
    switch (id) {
        case DecompId::F_LOG: return "F_LOG";
        case DecompId::XP1: return "XP1";
        case DecompId::ONE_XZ: return "ONE_XZ";
        case DecompId::ONE_XZ2: return "ONE_XZ2";
        case DecompId::R: return "R";
        case DecompId::R2: return "R2";
        case DecompId::XK2: return "XK2";
        case DecompId::PXK2: return "PXK2";
    }
    return "?";
}

namespace {

HighComplex pow_int(const HighComplex& x, long e) {
    if (e >= 0) return x.pow(static_cast<unsigned long>(e));
    return x.inverse().pow(static_cast<unsigned long>(-e));
}

void validate_decomp(DecompId id, const DecompParams& pr) {
    switch (id) {
        case DecompId::F_LOG:
            if (pr.k < 1) throw Error(ErrorKind::InvalidModulus, "F_LOG requires k >= 1");
            if (pr.m < 1 || pr.m > 4)
                throw Error(ErrorKind::UnsupportedIdentity, "F_LOG order must be 1..4");
            break;
        case DecompId::XP1:
            if (pr.p < 1) throw Error(ErrorKind::InvalidModulus, "XP1 requires p >= 1");
            break;
        case DecompId::ONE_XZ:
        case DecompId::ONE_XZ2:
            if (pr.k < 2) throw Error(ErrorKind::InvalidModulus, "requires k >= 2");
            break;
        case DecompId::R:
            if (pr.p < 2 || pr.q < 2) throw Error(ErrorKind::InvalidModulus, "R requires p, q >= 2");
            if (gcd(pr.p, pr.q) != 1) throw Error(ErrorKind::Coprimality, "R requires gcd(p, q) = 1");
            break;
        case DecompId::R2:
            if (pr.p < 3 || pr.q < 3 || pr.p % 2 == 0 || pr.q % 2 == 0)
                throw Error(ErrorKind::HypothesisViolated, "R2 requires odd p, q >= 3");
            if (gcd(pr.p, pr.q) != 1) throw Error(ErrorKind::Coprimality, "R2 requires gcd(p, q) = 1");
            break;
        case DecompId::XK2:
            if (pr.k < 2) throw Error(ErrorKind::InvalidModulus, "XK2 requires k >= 2");
            break;
        case DecompId::PXK2:
            if (pr.k < 3 || pr.k % 2 == 0)
                throw Error(ErrorKind::HypothesisViolated, "PXK2 requires odd k >= 3");
            break;
    }
}

}  // namespace

std::vector<HighComplex> decomp_poles(const PrecisionContext& ctx, DecompId id,
                                      const DecompParams& pr) {
    validate_decomp(id, pr);
    std::vector<HighComplex> poles;
    auto add_roots = [&](long k) {
        auto rs = roots_of_unity(ctx, k);
        for (auto& r : rs) poles.push_back(r);
    };
    switch (id) {
        case DecompId::F_LOG:
        case DecompId::ONE_XZ:
        case DecompId::ONE_XZ2:
        case DecompId::XK2: add_roots(pr.k); break;
        case DecompId::PXK2:
            add_roots(pr.k);
            poles.push_back(HighComplex(-1, ctx.precision_bits));
            break;
        case DecompId::XP1: add_roots(pr.p); break;
        case DecompId::R:
            add_roots(pr.p);
            add_roots(pr.q);
            break;
        case DecompId::R2:
            add_roots(pr.p);
            add_roots(pr.q);
            poles.push_back(HighComplex(-1, ctx.precision_bits));
            break;
    }
    return poles;
}

CheckReport partial_fraction_check(const PrecisionContext& ctx, DecompId id,
                                   const DecompParams& pr, const HighComplex& x) {
    validate_decomp(id, pr);
    BigFloat eighth = BigFloat(1L, ctx.precision_bits) / 8;
    for (const auto& pole : decomp_poles(ctx, id, pr)) {
        if ((x - pole).abs() < eighth)
            throw Error(ErrorKind::NearSingular, "x within 1/8 of a pole of the identity");
    }

    HighComplex one(1, ctx.precision_bits);
    HighComplex lhs(0, ctx.precision_bits), rhs(0, ctx.precision_bits);
    std::vector<std::pair<std::string, std::string>> params;

    switch (id) {
        case DecompId::F_LOG: {
            long k = pr.k;
            auto roots = roots_of_unity(ctx, k);
            for (long n = 1; n <= k; ++n)
                lhs += (x - roots[static_cast<size_t>(n - 1)]).inverse().pow(
                    static_cast<unsigned long>(pr.m));
            HighComplex xk = pow_int(x, k);
            HighComplex d = xk - one;
            switch (pr.m) {
                case 1: rhs = pow_int(x, k - 1) * k / d; break;
                case 2:
                    rhs = -(pow_int(x, k - 2) * (k * (k - 1))) / d +
                          pow_int(x, 2 * k - 2) * (k * k) / d.pow(2);
                    break;
                case 3:
                    rhs = pow_int(x, k - 3) * (k * (k - 1) * (k - 2)) / (d * 2) -
                          pow_int(x, 2 * k - 3) * (3 * k * k * (k - 1)) / (d.pow(2) * 2) +
                          pow_int(x, 3 * k - 3) * (k * k * k) / d.pow(3);
                    break;
                case 4:
                    rhs = -(pow_int(x, k - 4) * (k * (k - 1) * (k - 2) * (k - 3))) / (d * 6) +
                          pow_int(x, 2 * k - 4) * (k * k * (k - 1) * (7 * k - 11)) / (d.pow(2) * 6) -
                          pow_int(x, 3 * k - 4) * (2 * k * k * k * (k - 1)) / d.pow(3) +
                          pow_int(x, 4 * k - 4) * (k * k * k * k) / d.pow(4);
                    break;
            }
            params = {{"k", param_str(k)}, {"m", param_str(pr.m)}};
            break;
        }
        case DecompId::XP1: {
            long p = pr.p;
            auto roots = roots_of_unity(ctx, p);
            lhs = (pow_int(x, p) - one).inverse();
            for (long j = 1; j <= p; ++j) {
                const HighComplex& w = roots[static_cast<size_t>(j - 1)];
                rhs += w / (x - w);
            }
            rhs = rhs / p;
            params = {{"p", param_str(p)}};
            break;
        }
        case DecompId::ONE_XZ: {
            long k = pr.k;
            auto roots = roots_of_unity(ctx, k);
            for (long j = 1; j <= k - 1; ++j) lhs += (x - roots[static_cast<size_t>(j - 1)]).inverse();
            rhs = pow_int(x, k - 1) * k / (pow_int(x, k) - one) - (x - one).inverse();
            params = {{"k", param_str(k)}};
            break;
        }
        case DecompId::ONE_XZ2: {
            long k = pr.k;
            auto roots = roots_of_unity(ctx, k);
            for (long j = 1; j <= k - 1; ++j)
                lhs += (x - roots[static_cast<size_t>(j - 1)]).inverse().pow(2);
            HighComplex d = pow_int(x, k) - one;
            rhs = -((x - one).inverse().pow(2)) - pow_int(x, k - 2) * (k * (k - 1)) / d +
                  pow_int(x, 2 * k - 2) * (k * k) / d.pow(2);
            params = {{"k", param_str(k)}};
            break;
        }
        case DecompId::R: {
            long p = pr.p, q = pr.q;
            HighComplex xp = pow_int(x, p), xq = pow_int(x, q);
            lhs = x * (xp + one) * (xq + one) / ((x - one).pow(2) * (xp - one) * (xq - one));
            HighComplex xm1 = x - one;
            rhs = HighComplex::from_rational(R(p * p + q * q + 1) / R(3 * p * q), ctx.precision_bits) /
                      xm1 +
                  HighComplex::from_rational(R(p * p + q * q + 13) / R(3 * p * q), ctx.precision_bits) /
                      xm1.pow(2) +
                  HighComplex::from_rational(R(8) / R(p * q), ctx.precision_bits) / xm1.pow(3) +
                  HighComplex::from_rational(R(4) / R(p * q), ctx.precision_bits) / xm1.pow(4);
            auto wroots = roots_of_unity(ctx, p);
            for (long j = 1; j <= p - 1; ++j) {
                const HighComplex& w = wroots[static_cast<size_t>(j - 1)];
                const HighComplex& wq = root_at(wroots, j * q);
                rhs += w.pow(2) * (wq + one) / ((w - one).pow(2) * (wq - one) * (x - w)) * 2 / p;
            }
            auto xroots = roots_of_unity(ctx, q);
            for (long j = 1; j <= q - 1; ++j) {
                const HighComplex& xi = xroots[static_cast<size_t>(j - 1)];
                const HighComplex& xip = root_at(xroots, j * p);
                rhs += xi.pow(2) * (xip + one) / ((xi - one).pow(2) * (xip - one) * (x - xi)) * 2 / q;
            }
            params = {{"p", param_str(p)}, {"q", param_str(q)}};
            break;
        }
        case DecompId::R2: {
            long p = pr.p, q = pr.q;
            HighComplex xp = pow_int(x, p), xq = pow_int(x, q);
            lhs = x * (xp + one) * (xq + one) / ((x + one).pow(2) * (xp - one) * (xq - one));
            HighComplex xm1 = x - one;
            rhs = HighComplex::from_rational(R(1) / R(p * q), ctx.precision_bits) / xm1 +
                  HighComplex::from_rational(R(1) / R(p * q), ctx.precision_bits) / xm1.pow(2);
            auto wroots = roots_of_unity(ctx, p);
            for (long j = 1; j <= p - 1; ++j) {
                const HighComplex& w = wroots[static_cast<size_t>(j - 1)];
                const HighComplex& wq = root_at(wroots, j * q);
                rhs += w.pow(2) * (wq + one) / ((w + one).pow(2) * (wq - one) * (x - w)) * 2 / p;
            }
            auto xroots = roots_of_unity(ctx, q);
            for (long j = 1; j <= q - 1; ++j) {
                const HighComplex& xi = xroots[static_cast<size_t>(j - 1)];
                const HighComplex& xip = root_at(xroots, j * p);
                rhs += xi.pow(2) * (xip + one) / ((xi + one).pow(2) * (xip - one) * (x - xi)) * 2 / q;
            }
            params = {{"p", param_str(p)}, {"q", param_str(q)}};
            break;
        }
        case DecompId::XK2: {
            long k = pr.k;
            HighComplex xk = pow_int(x, k);
            lhs = x / ((x - one).pow(2) * (xk - one).pow(2));
            HighComplex xm1 = x - one;
            long k2 = k * k;
            rhs = HighComplex::from_rational(-(R((k - 1) * (k2 - 4 * k + 1))) / R(12 * k2),
                                             ctx.precision_bits) /
                      xm1 +
                  HighComplex::from_rational(R((k - 1) * (5 * k - 13)) / R(12 * k2),
                                             ctx.precision_bits) /
                      xm1.pow(2) -
                  HighComplex::from_rational(R(k - 2) / R(k2), ctx.precision_bits) / xm1.pow(3) +
                  HighComplex::from_rational(R(1) / R(k2), ctx.precision_bits) / xm1.pow(4);
            auto roots = roots_of_unity(ctx, k);
            for (long j = 1; j <= k - 1; ++j) {
                const HighComplex& z = roots[static_cast<size_t>(j - 1)];
                HighComplex zm = z - one;
                HighComplex coeff = z.pow(2) * k / zm.pow(2) + z.pow(2) * 2 / zm.pow(3);
                rhs -= coeff / (x - z) / k2;
                rhs += z.pow(3) / (zm.pow(2) * (x - z).pow(2)) / k2;
            }
            params = {{"k", param_str(k)}};
            break;
        }
        case DecompId::PXK2: {
            long k = pr.k;
            HighComplex xk = pow_int(x, k);
            lhs = x / ((x + one).pow(2) * (xk - one).pow(2));
            HighComplex xm1 = x - one, xp1 = x + one;
            long k2 = k * k;
            rhs = HighComplex::from_rational(-(R(k - 1)) / R(4 * k2), ctx.precision_bits) / xm1 +
                  HighComplex::from_rational(R(1) / R(4 * k2), ctx.precision_bits) / xm1.pow(2) -
                  HighComplex::from_rational(R(k - 1) / R(4), ctx.precision_bits) / xp1 -
                  HighComplex::from_rational(R(1) / R(4), ctx.precision_bits) / xp1.pow(2);
            auto roots = roots_of_unity(ctx, k);
            for (long j = 1; j <= k - 1; ++j) {
                const HighComplex& z = roots[static_cast<size_t>(j - 1)];
                HighComplex zp = z + one;
                HighComplex coeff = z.pow(2) * k / zp.pow(2) - z.pow(2) * 2 / zp.pow(3);
                rhs -= coeff / (x - z) / k2;
                rhs += z.pow(3) / (zp.pow(2) * (x - z).pow(2)) / k2;
            }
            params = {{"k", param_str(k)}};
            break;
        }
    }
    params.emplace_back("x", x.str());
    return CheckReport::numeric(ctx, std::string("rootsum.decomp.") + decomp_name(id), params, lhs, rhs);
}

}  // namespace trigsum

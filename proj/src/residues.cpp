#include "trigsum/residues.hpp"

#include "trigsum/trigsums.hpp"

namespace trigsum {

namespace {

Rational R(long v) { return Rational(v); }

HighComplex complex_sin(const HighComplex& w) {
    HighComplex iw(-w.im(), w.re());
    HighComplex e1 = iw.exp();
    HighComplex e2 = e1.inverse();
    HighComplex diff = e1 - e2;
    // (e^{iw} - e^{-iw}) / (2i)
    return {diff.im() / 2, -diff.re() / 2};
}

HighComplex complex_cos(const HighComplex& w) {
    HighComplex iw(-w.im(), w.re());
    HighComplex e1 = iw.exp();
    HighComplex e2 = e1.inverse();
    return (e1 + e2) / 2;
}

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

const char* meromorphic_name(MeromorphicId id) {
    return id == MeromorphicId::F_COS ? "F_COS" : "G_SIN";
}

const char* pole_class_name(PoleClass c) {
    switch (c) {
        case PoleClass::K4: return "k/4";
        case PoleClass::K34: return "3k/4";
        case PoleClass::ZERO: return "0";
        case PoleClass::KHALF: return "k/2";
    }
    return "?";
}

void validate_meromorphic_spec(const MeromorphicSpec& spec) {
    if (spec.k < 1 || spec.k % 2 == 0)
        throw Error(ErrorKind::HypothesisViolated, "meromorphic spec requires odd k");
    if (spec.a < 1) throw Error(ErrorKind::HypothesisViolated, "requires a >= 1");
}

HighComplex eval_meromorphic(const PrecisionContext& ctx, const MeromorphicSpec& spec,
                             const HighComplex& z) {
    BigFloat pi = BigFloat::pi(ctx.precision_bits);
    HighComplex w1 = z * (pi / spec.k);
    HighComplex w2 = z * ((pi * 2) / spec.k);
    unsigned long top_pow = static_cast<unsigned long>(2 * spec.a);
    unsigned long bot_pow = top_pow + 2;
    HighComplex top = (spec.id == MeromorphicId::F_COS) ? complex_cos(w1) : complex_sin(w1);
    HighComplex bot = (spec.id == MeromorphicId::F_COS) ? complex_cos(w2) : complex_sin(w2);
    // e^{2 pi i z} - 1
    HighComplex arg(-(z.im() * (pi * 2)), z.re() * (pi * 2));
    HighComplex expz = arg.exp() - HighComplex(1, ctx.precision_bits);
    return top.pow(top_pow) / (bot.pow(bot_pow) * expz);
}

std::vector<HighComplex> meromorphic_poles(const PrecisionContext& ctx, const MeromorphicSpec& spec) {
    validate_meromorphic_spec(spec);
    std::vector<HighComplex> poles;
    BigFloat quarter = BigFloat(spec.k, ctx.precision_bits) / 4;
    BigFloat half = BigFloat(spec.k, ctx.precision_bits) / 2;
    if (spec.id == MeromorphicId::F_COS) {
        for (long n = 0; n < spec.k; ++n) poles.push_back(HighComplex(n, ctx.precision_bits));
        poles.push_back(HighComplex(quarter));
        poles.push_back(HighComplex(quarter * 3));
    } else {
        for (long n = 0; n < spec.k; ++n) poles.push_back(HighComplex(n, ctx.precision_bits));
        poles.push_back(HighComplex(half));
    }
    return poles;
}

HighComplex residue_numeric(const PrecisionContext& ctx, const MeromorphicSpec& spec,
                            const ContourSpec& contour) {
    validate_meromorphic_spec(spec);
    if (!is_power_of_two(contour.nodes) || contour.nodes < 256)
        throw Error(ErrorKind::Contour, "nodes must be a power of two >= 256");
    if (contour.radius.sign() <= 0) throw Error(ErrorKind::Contour, "radius must be positive");

    BigFloat radius(contour.radius, ctx.precision_bits);
    long inside = 0;
    for (const auto& pole : meromorphic_poles(ctx, spec)) {
        BigFloat d = (contour.center - pole).abs();
        if (d < radius)
            ++inside;
        else if (d == radius)
            throw Error(ErrorKind::Contour, "contour passes through a pole");
    }
    if (inside != 1)
        throw Error(ErrorKind::Contour,
                    "contour must enclose exactly one pole, encloses " + std::to_string(inside));

    BigFloat two_pi = BigFloat::pi(ctx.precision_bits) * 2;
    HighComplex acc(0, ctx.precision_bits);
    for (long j = 0; j < contour.nodes; ++j) {
        // theta = 2 pi (j + 1/2) / nodes
        BigFloat theta = two_pi * (2 * j + 1) / (2 * contour.nodes);
        auto [s, c] = theta.sin_cos();
        HighComplex dir(std::move(c), std::move(s));
        HighComplex z = contour.center + dir * radius;
        acc += eval_meromorphic(ctx, spec, z) * dir;
    }
    return acc * radius / contour.nodes;
}

HighComplex pole_location(const PrecisionContext& ctx, const MeromorphicSpec& spec, PoleClass c) {
    validate_meromorphic_spec(spec);
    BigFloat k(spec.k, ctx.precision_bits);
    switch (c) {
        case PoleClass::K4:
            if (spec.id != MeromorphicId::F_COS)
                throw Error(ErrorKind::UnsupportedIdentity, "pole k/4 belongs to F_COS");
            return HighComplex(k / 4);
        case PoleClass::K34:
            if (spec.id != MeromorphicId::F_COS)
                throw Error(ErrorKind::UnsupportedIdentity, "pole 3k/4 belongs to F_COS");
            return HighComplex(k * 3 / 4);
        case PoleClass::ZERO:
            if (spec.id != MeromorphicId::G_SIN)
                throw Error(ErrorKind::UnsupportedIdentity, "pole 0 belongs to G_SIN");
            return HighComplex(0, ctx.precision_bits);
        case PoleClass::KHALF:
            if (spec.id != MeromorphicId::G_SIN)
                throw Error(ErrorKind::UnsupportedIdentity, "pole k/2 belongs to G_SIN");
            return HighComplex(k / 2);
    }
    throw Error(ErrorKind::UnsupportedIdentity, "unknown pole class");
}

HighComplex residue_closed(const PrecisionContext& ctx, const MeromorphicSpec& spec, PoleClass c) {
    validate_meromorphic_spec(spec);
    if (spec.a != 1)
        throw Error(ErrorKind::UnsupportedIdentity, "closed residues are published for a = 1 only");
    long k = spec.k;
    BigFloat pi = BigFloat::pi(ctx.precision_bits);
    HighComplex i = HighComplex::i(ctx.precision_bits);
    switch (c) {
        case PoleClass::K4:
        case PoleClass::K34: {
            if (spec.id != MeromorphicId::F_COS)
                throw Error(ErrorKind::UnsupportedIdentity, "pole class belongs to F_COS");
            long sign34 = (c == PoleClass::K34) ? 1 : -1;  // the +-3i term flips between k/4 and 3k/4
            GaussianRational inner =
                (k % 4 == 1)
                    ? GaussianRational(R(3 + 4 * k + 3 * k * k + 2 * k * k * k), R(3 * sign34))
                    : GaussianRational(R(-3 + 4 * k - 3 * k * k + 2 * k * k * k), R(3 * sign34));
            HighComplex val = HighComplex::from_gaussian(inner, ctx.precision_bits);
            return i * val * (BigFloat(k, ctx.precision_bits) / (pi * 48));
        }
        case PoleClass::ZERO: {
            BigFloat re = BigFloat(k * k - 7, ctx.precision_bits) / (pi * 96);
            return HighComplex(BigFloat(0L, ctx.precision_bits), std::move(re));
        }
        case PoleClass::KHALF: {
            BigFloat re = BigFloat(k * k, ctx.precision_bits) * (k * k + 5) / (pi * 96);
            return HighComplex(BigFloat(0L, ctx.precision_bits), std::move(re));
        }
    }
    throw Error(ErrorKind::UnsupportedIdentity, "unknown pole class");
}

CheckReport section9_check(const PrecisionContext& ctx, const MeromorphicSpec& spec, long nodes) {
    validate_meromorphic_spec(spec);
    BigFloat pi = BigFloat::pi(ctx.precision_bits);
    HighComplex pi_i(BigFloat(0L, ctx.precision_bits), pi);
    ContourSpec contour;
    contour.nodes = nodes;

    HighComplex lhs(0, ctx.precision_bits), rhs(0, ctx.precision_bits);
    if (spec.id == MeromorphicId::F_COS) {
        lhs = half_range_power_sum(ctx, false, spec.k, spec.a);
        contour.center = pole_location(ctx, spec, PoleClass::K4);
        HighComplex r1 = residue_numeric(ctx, spec, contour);
        contour.center = pole_location(ctx, spec, PoleClass::K34);
        HighComplex r2 = residue_numeric(ctx, spec, contour);
        rhs = HighComplex(BigFloat(-1L, ctx.precision_bits) / 2) - pi_i * (r1 + r2);
    } else {
        lhs = half_range_power_sum(ctx, true, spec.k, spec.a);
        contour.center = pole_location(ctx, spec, PoleClass::ZERO);
        HighComplex r1 = residue_numeric(ctx, spec, contour);
        contour.center = pole_location(ctx, spec, PoleClass::KHALF);
        HighComplex r2 = residue_numeric(ctx, spec, contour);
        rhs = -(pi_i * (r1 + r2));
    }
    return CheckReport::numeric(ctx, std::string("residue.section9.") + meromorphic_name(spec.id),
                                {{"k", param_str(spec.k)}, {"a", param_str(spec.a)}}, lhs, rhs);
}

}  // namespace trigsum

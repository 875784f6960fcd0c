#pragma once

#include <string>
#include <vector>

#include "trigsum/check.hpp"
#include "trigsum/numeric.hpp"

namespace trigsum {

/// Labels follow the denominators as the lemmas write them:
/// PlusOne: (z-1), MinusOne: (z+1), PlusI: (z+i), MinusI: (z-i).
enum class Pole { PlusOne, MinusOne, PlusI, MinusI };
enum class SumRange { Full, OmitPole };  // n = 1..k vs n = 1..k-1

/// One tabulated root-of-unity sum over z_n = e^(2 pi i n / k).
struct PoleSpec {
    long k = 1;
    Pole pole = Pole::PlusOne;
    int m = 1;   // pole order, 1..4
    int a = 0;   // numerator power, 0..4 (a <= m)
    SumRange range = SumRange::OmitPole;
};

const char* pole_name(Pole p);
const char* range_name(SumRange r);

HighComplex pole_sum_bruteforce(const PrecisionContext& ctx, const PoleSpec& spec);
GaussianRational pole_sum_closed(const PoleSpec& spec);

/// Closed form for poles +-i with the mod-4 branch forced; the negative
/// controls use the wrong branch to confirm the oracle rejects it.
GaussianRational pole_sum_closed_imaginary_branch(const PoleSpec& spec, bool k1_branch);

/// All (pole, m, a, range) combinations the closed-form tables cover for a
/// given k; used by the sweep suites.
std::vector<PoleSpec> tabulated_pole_specs(long k);

/// Sums over the nontrivial q-th roots xi_j = e^(2 pi i j / q), j = 1..q-1,
/// with the power entering as xi_j^p.
enum class RootSumShape {
    XiOver1Sq,        // xi / ((xi-1)^2 (xi^p-1))
    XiOver1Cu,        // xi / ((xi-1)^3 (xi^p-1))
    XiOver1SqPowSq,   // xi / ((xi-1)^2 (xi^p-1)^2)
    XiOverP1Sq,       // xi / ((xi+1)^2 (xi^p-1))
    XiOverP1Cu,       // xi / ((xi+1)^3 (xi^p-1))
    XiOverP1SqPowSq,  // xi / ((xi+1)^2 (xi^p-1)^2)
    InvOver1,         // 1 / ((xi-1) (xi^p-1))
    InvOver1Sq,       // 1 / ((xi-1)^2 (xi^p-1))
    InvOver1Cu,       // 1 / ((xi-1)^3 (xi^p-1))
    InvOverP1,        // 1 / ((xi+1) (xi^p-1))
    InvOverP1Sq,      // 1 / ((xi+1)^2 (xi^p-1))
    XiOverSqM1,       // xi / ((xi^2-1) (xi^p-1))
};

HighComplex mixed_sum_bruteforce(const PrecisionContext& ctx, long p, long q, RootSumShape shape);

enum class MixedIdentityId {
    LEMR1, LEMR2, LEMR4, LEMR21, LEMR22, LEMR21P, LEMR23, LEMR24, LEMR1_1, LEMR2_1,
};

const char* mixed_identity_name(MixedIdentityId id);
/// Checks whether (p, q) satisfies the law's hypotheses; throws when they are
/// structurally invalid (gcd != 1) and returns false for parity mismatches.
bool mixed_identity_admissible(long p, long q, MixedIdentityId id, std::string* why = nullptr);
CheckReport mixed_identity_check(const PrecisionContext& ctx, long p, long q, MixedIdentityId id);

enum class DecompId { F_LOG, XP1, ONE_XZ, ONE_XZ2, R, R2, XK2, PXK2 };

const char* decomp_name(DecompId id);

struct DecompParams {
    long k = 0;  // modulus for the single-modulus identities
    long p = 0;
    long q = 0;
    int m = 1;  // pole order for F_LOG
};

CheckReport partial_fraction_check(const PrecisionContext& ctx, DecompId id,
                                   const DecompParams& params, const HighComplex& x);

/// Poles of the identity, for the near-singular guard and point generators.
std::vector<HighComplex> decomp_poles(const PrecisionContext& ctx, DecompId id,
                                      const DecompParams& params);

}  // namespace trigsum

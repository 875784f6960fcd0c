#pragma once

#include <string>

#include "trigsum/check.hpp"
#include "trigsum/numeric.hpp"

namespace trigsum {

/// Sawtooth ((x)) = x - floor(x) - 1/2 for non-integer x, 0 at integers.
Rational sawtooth(const Rational& x);

/// Dedekind sum s(p, q) = sum_{n=1}^{q} ((pn/q)) ((n/q)), exact.
Rational dedekind_sum(long p, long q);

/// Rademacher's cotangent form (1/4q) sum cot(pi pn/q) cot(pi n/q).
HighComplex dedekind_cot(const PrecisionContext& ctx, long p, long q);

/// Generalized Dedekind sum S_3(h, k) via Bernoulli polynomial B_3, exact.
Rational s3(long h, long k);
/// Cotangent representation -3/(8k^3) sum cot(h pi n/k) cot(pi n/k) csc^2(pi n/k).
HighComplex s3_cot(const PrecisionContext& ctx, long h, long k);

enum class CotKernel { PLAIN, COT3, CSC2, SEC2, COT3_SEC2, CSC4, CSC6 };
const char* cot_kernel_name(CotKernel k);

/// sum_{n=1}^{q-1} cot(pi n p/q) * <kernel factors in pi n/q>.
HighComplex cot_pair_sum(const PrecisionContext& ctx, long p, long q, CotKernel kernel);

enum class SingleTheorem { CPC, CPC3, S3T, CPCC2, CPC3C2 };
const char* single_theorem_name(SingleTheorem t);
CheckReport single_theorem_check(const PrecisionContext& ctx, long p, long q, SingleTheorem t);

enum class ReciprocityLaw {
    DEDEKIND_COT,
    DEDEKIND_S,
    COT3,
    T_LAW,
    SEC2_LAW,
    COT3SEC2_LAW,
    CSC4_LAW,
    CSC6_LAW,
};
const char* reciprocity_law_name(ReciprocityLaw law);
bool reciprocity_law_admissible(long p, long q, ReciprocityLaw law, std::string* why = nullptr);
/// Exact rational right side of a two-term law.
Rational reciprocity_rhs(long p, long q, ReciprocityLaw law);
/// p * S(p,q) + q * S(q,p) against the exact right side (exact end-to-end for
/// DEDEKIND_S). `perturb` adds the given integer to the right side; the
/// negative-control suite uses +1.
CheckReport reciprocity_check(const PrecisionContext& ctx, long p, long q, ReciprocityLaw law,
                              long perturb = 0);

/// Four-sum reciprocity; p, q, r, s distinct odd pairwise coprime (value 1
/// permitted but flagged in the report note).
CheckReport four_sum_check(const PrecisionContext& ctx, long p, long q, long r, long s);

}  // namespace trigsum

#pragma once

#include <string>
#include <vector>

#include "trigsum/check.hpp"
#include "trigsum/numeric.hpp"

namespace trigsum {

enum class TrigFamily {
    COS2_OVER_COS4,      // sum_{n=1}^{k} cos^2(pi n/k) / cos^4(2 pi n/k), k odd
    INV_COS4,            // sum_{n=1}^{k} 1 / cos^4(pi n/k), k odd
    SIN2_OVER_COS4,      // sum_{n=1}^{k} sin^2(pi n/k) / cos^4(2 pi n/k), k odd
    SIN2_OVER_SIN4,      // sum_{n=1}^{k-1} sin^2(pi n/k) / sin^4(2 pi n/k), k odd
    INV_SIN4,            // sum_{n=1}^{k-1} 1 / sin^4(pi n/k), any k
    INV_SIN4_DOUBLE,     // sum_{n=1}^{k-1} 1 / sin^4(2 pi n/k), k odd
    COS2_OVER_SIN4,      // sum_{n=1}^{k-1} cos^2(pi n/k) / sin^4(2 pi n/k), k odd
    INV_SIN2,            // sum_{n=1}^{k-1} 1 / sin^2(pi n/k), any k
    INV_COS2,            // sum_{n=1}^{k} 1 / cos^2(pi n/k), k odd
    TAN2_SEC2,           // sum_{n=1}^{k} tan^2 sec^2 (pi n/k), k odd
    COS2N_SEC4,          // sum_{n=1}^{k} cos(2 pi n/k) sec^4(pi n/k), k odd
    S3_COT2_CSC2,        // -3/(8k^3) sum_{n=1}^{k-1} cot^2 csc^2 (pi n/k), k odd
    S3_COT_COT2_CSC2,    // -3/(8k^3) sum cot(2 pi n/k) cot csc^2 (pi n/k), k odd
};

const char* trig_family_name(TrigFamily f);
const std::vector<TrigFamily>& all_trig_families();

/// True when k satisfies the family's parity hypothesis.
bool trig_family_admissible(TrigFamily f, long k);
/// Paper's summation range: n = 1..k (true) or n = 1..k-1 (false).
bool trig_family_runs_to_k(TrigFamily f);

HighComplex trig_sum_bruteforce(const PrecisionContext& ctx, TrigFamily f, long k);
Rational trig_sum_closed(TrigFamily f, long k);

/// Closed form with the mod-4 branch forced, for the branch families
/// (COS2_OVER_COS4, SIN2_OVER_COS4); negative controls feed the wrong branch.
Rational trig_sum_closed_branch(TrigFamily f, long k, bool k1_branch);

/// Verifies full-range = 2 * (sum over 0 < n < k/2) + boundary terms.
CheckReport half_range_relation_check(const PrecisionContext& ctx, TrigFamily f, long k);

/// Exact check of sum_{n=1..m} sin^2/sin^4 = (4/3) T(T(m)) at k = 2m+1.
CheckReport triangular_identity_check(long m);

/// Brute-force half-range power sums of the contour-integration section:
/// kind false: sum_{0<n<k/2} cos^{2a}(pi n/k) / cos^{2a+2}(2 pi n/k)
/// kind true:  sum_{0<n<k/2} sin^{2a}(pi n/k) / sin^{2a+2}(2 pi n/k)
HighComplex half_range_power_sum(const PrecisionContext& ctx, bool sin_kind, long k, int a);

}  // namespace trigsum

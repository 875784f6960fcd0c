#pragma once

#include "trigsum/check.hpp"
#include "trigsum/numeric.hpp"

namespace trigsum {

enum class TwoPeriodKernel { CSC2, SEC2 };

/// Sum over 1 <= n <= pq-1 with p and q both not dividing n of
/// cot(pi n/p) cot(pi n/q) / sin^2(pi n/pq)   (CSC2, p,q >= 2 coprime)
/// cot(pi n/p) cot(pi n/q) / cos^2(pi n/pq)   (SEC2, p,q odd >= 3 coprime)
struct TwoPeriodSpec {
    long p = 2;
    long q = 3;
    TwoPeriodKernel kernel = TwoPeriodKernel::CSC2;
};

const char* two_period_kernel_name(TwoPeriodKernel k);
void validate_two_period_spec(const TwoPeriodSpec& spec);

HighComplex two_period_bruteforce(const PrecisionContext& ctx, const TwoPeriodSpec& spec);

/// The theorem's right side: exact rational polynomial part plus the residual
/// root-of-unity sums evaluated numerically.
HighComplex two_period_semiclosed(const PrecisionContext& ctx, const TwoPeriodSpec& spec);

/// Fully closed value for q = +-1 (mod p).
Rational two_period_closed_special(const TwoPeriodSpec& spec);

}  // namespace trigsum

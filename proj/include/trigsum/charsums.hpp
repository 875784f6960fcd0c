#pragma once

#include <vector>

#include "trigsum/characters.hpp"
#include "trigsum/check.hpp"
#include "trigsum/laurent.hpp"

namespace trigsum {

/// G(z, chi) = sum_{n=1}^{k} chi(n) e^(2 pi i n z / k), z complex.
HighComplex gauss_sum(const PrecisionContext& ctx, const DirichletCharacter& chi,
                      const HighComplex& z);
HighComplex gauss_sum(const PrecisionContext& ctx, const DirichletCharacter& chi);

/// Tests G(n, chi) = chi(n) G(chi) and the conjugate-character form; the
/// note records which convention holds for this character.
CheckReport factorization_check(const PrecisionContext& ctx, const DirichletCharacter& chi, long n);

enum class CharSumVariant { SIN_RATIO, COS_RATIO, MULTI_SIN, TWO_CHAR };
const char* char_sum_variant_name(CharSumVariant v);

struct CharSumSpec {
    CharSumVariant variant = CharSumVariant::SIN_RATIO;
    // SIN_RATIO / COS_RATIO: chi1 mod p, odd a > 1 with a - 3 < 2p.
    // MULTI_SIN: chi1 mod prime p, odd a_list entries > 1, sum - k - 2 < 2p.
    // TWO_CHAR: chi1 mod p, chi2 mod q, odd a1,a2, even b1,b2, hypothesis
    //           q(a1 b1 - a1 - 3) + p(a2 b2 - a2 - 3) < 2 p q.
    const DirichletCharacter* chi1 = nullptr;
    const DirichletCharacter* chi2 = nullptr;
    long a = 3;
    std::vector<long> a_list;
    long a1 = 1, a2 = 1, b1 = 2, b2 = 2;
};

void validate_char_sum_spec(const CharSumSpec& spec);

HighComplex char_sum_bruteforce(const PrecisionContext& ctx, const CharSumSpec& spec);
HighComplex char_sum_closed(const PrecisionContext& ctx, const CharSumSpec& spec);

CheckReport char_sum_check(const PrecisionContext& ctx, const CharSumSpec& spec);

/// The two candidate a = 5 evaluations: the displayed constant-extraction
/// formula gives (chi(2) + 1) for the sin ratio and (chi(2) - 1) for the cos
/// ratio, while the paper's worked example claims chi(2) for both. Both
/// candidates are compared against the oracle and the verdict is recorded.
CheckReport example2_discrepancy_check(const PrecisionContext& ctx, const DirichletCharacter& chi,
                                       bool cos_variant);

}  // namespace trigsum

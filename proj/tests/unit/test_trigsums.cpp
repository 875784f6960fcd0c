#include <doctest.h>

#include "trigsum/trigsums.hpp"

using namespace trigsum;

namespace {
const PrecisionContext& ctx() {
    static PrecisionContext c = make_context(256);
    return c;
}
}  // namespace

TEST_CASE("brute-force spot values") {
    // k=3: 4 + 4 + 1
    CHECK(approx_equal(ctx(), trig_sum_bruteforce(ctx(), TrigFamily::COS2_OVER_COS4, 3),
                       HighComplex(9, 256)));
    // k=3: 16 + 16 + 1
    CHECK(approx_equal(ctx(), trig_sum_bruteforce(ctx(), TrigFamily::INV_COS4, 3),
                       HighComplex(33, 256)));
    // k=4: 2 + 1 + 2
    CHECK(approx_equal(ctx(), trig_sum_bruteforce(ctx(), TrigFamily::INV_SIN2, 4),
                       HighComplex(5, 256)));
    CHECK_THROWS_AS(trig_sum_bruteforce(ctx(), TrigFamily::INV_COS4, 4), Error);
    try {
        trig_sum_bruteforce(ctx(), TrigFamily::INV_COS4, 4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
    }
}

TEST_CASE("closed-form spot values") {
    CHECK(trig_sum_closed(TrigFamily::COS2_OVER_COS4, 5) == Rational(145));
    CHECK(trig_sum_closed(TrigFamily::COS2_OVER_COS4, 7) == Rational(329));
    CHECK(trig_sum_closed(TrigFamily::S3_COT2_CSC2, 3) == Rational(-1, 81));
    CHECK(trig_sum_closed(TrigFamily::INV_SIN2, 4) == Rational(5));
    CHECK(trig_sum_closed(TrigFamily::SIN2_OVER_SIN4, 7) == Rational(56));
}

TEST_CASE("all families match the oracle for admissible k up to 31") {
    for (TrigFamily f : all_trig_families()) {
        for (long k = 1; k <= 31; ++k) {
            if (!trig_family_admissible(f, k)) continue;
            HighComplex brute = trig_sum_bruteforce(ctx(), f, k);
            HighComplex closed = HighComplex::from_rational(trig_sum_closed(f, k), 256);
            CAPTURE(trig_family_name(f));
            CAPTURE(k);
            CHECK(approx_equal(ctx(), brute, closed));
            CHECK(brute.im().abs() <= ctx().tolerance);
        }
    }
}

TEST_CASE("half-range relation") {
    CHECK(half_range_relation_check(ctx(), TrigFamily::COS2_OVER_COS4, 5).pass);
    CHECK(half_range_relation_check(ctx(), TrigFamily::SIN2_OVER_SIN4, 7).pass);
    CHECK(half_range_relation_check(ctx(), TrigFamily::INV_SIN2, 2).pass);
    for (TrigFamily f : all_trig_families())
        for (long k : {2L, 9L, 12L, 15L})
            if (trig_family_admissible(f, k)) CHECK(half_range_relation_check(ctx(), f, k).pass);
}

TEST_CASE("half range against the paper's worked values") {
    // k=5: sum over 0<n<5/2 equals 4*18 = 72; full = 2*72 + 1 = 145
    HighComplex half(0, 256);
    for (long n = 1; 2 * n < 5; ++n) {
        BigFloat c1 = cos_pi_frac(ctx(), n, 5);
        BigFloat c2 = cos_pi_frac(ctx(), 2 * n, 5);
        half += HighComplex(c1 * c1 / (c2 * c2 * c2 * c2));
    }
    CHECK(approx_equal(ctx(), half, HighComplex(72, 256)));
    CHECK(approx_equal(ctx(), half_range_power_sum(ctx(), false, 5, 1), HighComplex(72, 256)));
    // (17a): k=7 sin family half-range = 28
    CHECK(approx_equal(ctx(), half_range_power_sum(ctx(), true, 7, 1), HighComplex(28, 256)));
}

TEST_CASE("triangular identity") {
    CHECK(triangular_identity_check(3).pass);  // both sides 28
    CHECK(triangular_identity_check(1).pass);  // both sides 4/3
    CheckReport r4 = triangular_identity_check(4);
    CHECK(r4.pass);
    CHECK(r4.rhs == "220/3");
    for (long m = 1; m <= 50; ++m) CHECK(triangular_identity_check(m).pass);
}

TEST_CASE("wrong branch fails against the oracle for odd k in 5..101") {
    for (long k = 5; k <= 101; k += 2) {
        HighComplex brute = trig_sum_bruteforce(ctx(), TrigFamily::COS2_OVER_COS4, k);
        Rational wrong = trig_sum_closed_branch(TrigFamily::COS2_OVER_COS4, k, k % 4 != 1);
        CHECK_FALSE(approx_equal(ctx(), brute, HighComplex::from_rational(wrong, 256)));
    }
}

TEST_CASE("exact corollary consistency for odd k up to 101") {
    for (long k = 1; k <= 101; k += 2) {
        CHECK(trig_sum_closed(TrigFamily::SIN2_OVER_COS4, k) ==
              trig_sum_closed(TrigFamily::INV_COS4, k) -
                  trig_sum_closed(TrigFamily::COS2_OVER_COS4, k));
        CHECK(trig_sum_closed(TrigFamily::TAN2_SEC2, k) ==
              trig_sum_closed(TrigFamily::INV_COS4, k) - trig_sum_closed(TrigFamily::INV_COS2, k));
        CHECK(trig_sum_closed(TrigFamily::COS2N_SEC4, k) ==
              Rational(2) * trig_sum_closed(TrigFamily::INV_COS2, k) -
                  trig_sum_closed(TrigFamily::INV_COS4, k));
        CHECK(trig_sum_closed(TrigFamily::INV_SIN4_DOUBLE, k) ==
              trig_sum_closed(TrigFamily::INV_SIN4, k));
    }
}

#include <doctest.h>

#include "trigsum/reciprocity.hpp"

using namespace trigsum;

namespace {
const PrecisionContext& ctx() {
    static PrecisionContext c = make_context(256);
    return c;
}
}  // namespace

TEST_CASE("sawtooth and dedekind sums, exact") {
    CHECK(sawtooth(Rational(7)) == Rational(0));
    CHECK(sawtooth(Rational(1, 3)) == Rational(-1, 6));
    CHECK(sawtooth(Rational(-1, 3)) == Rational(1, 6));
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum(2, 3) == Rational(-1, 18));
    CHECK(dedekind_sum(5, 1) == Rational(0));
    // s(1, q) = (q-1)(q-2)/(12 q); the sawtooth oracle gives 1/5 at q = 5
    CHECK(dedekind_sum(1, 5) == Rational(1, 5));
    CHECK_THROWS_AS(dedekind_sum(3, 9), Error);
}

TEST_CASE("dedekind cotangent representation matches the sawtooth sum") {
    CHECK(approx_equal(ctx(), dedekind_cot(ctx(), 1, 3),
                       HighComplex::from_rational(Rational(1, 18), 256)));
    CHECK(approx_equal(ctx(), dedekind_cot(ctx(), 2, 3),
                       HighComplex::from_rational(Rational(-1, 18), 256)));
    CHECK(approx_equal(ctx(), dedekind_cot(ctx(), 3, 2), HighComplex(0, 256)));
    for (long q = 2; q <= 50; ++q)
        for (long p = 1; p < q; ++p) {
            if (gcd(p, q) != 1) continue;
            CHECK(approx_equal(ctx(), dedekind_cot(ctx(), p, q),
                               HighComplex::from_rational(dedekind_sum(p, q), 256)));
        }
}

TEST_CASE("dedekind sign law, exact, p < q <= 50") {
    for (long q = 2; q <= 50; ++q)
        for (long p = 1; p < q; ++p) {
            if (gcd(p, q) != 1) continue;
            CHECK(dedekind_sum(q - p, q) == -dedekind_sum(p, q));
        }
}

TEST_CASE("generalized dedekind sums") {
    CHECK(s3(1, 3) == Rational(-1, 81));
    CHECK(s3(2, 3) == Rational(1, 81));
    CHECK(s3(1, 2) == Rational(0));
    for (long k = 2; k <= 50; ++k)
        for (long h = 1; h < k; ++h) {
            if (gcd(h, k) != 1) continue;
            CHECK(approx_equal(ctx(), s3_cot(ctx(), h, k),
                               HighComplex::from_rational(s3(h, k), 256)));
        }
    // closed forms for h = 1, 2 at odd k
    for (long k = 3; k <= 101; k += 2) {
        Rational k2(k * k);
        CHECK(s3(1, k) == -((k2 - Rational(1)) * (k2 - Rational(4))) /
                              (Rational(120) * Rational(k * k * k)));
        CHECK(s3(2, k) == -((k2 - Rational(1)) * (k2 - Rational(19))) /
                              (Rational(240) * Rational(k * k * k)));
    }
}

TEST_CASE("cotangent pair sums") {
    CHECK(approx_equal(ctx(), cot_pair_sum(ctx(), 2, 3, CotKernel::CSC2),
                       HighComplex::from_rational(Rational(-8, 9), 256)));
    CHECK(approx_equal(ctx(), cot_pair_sum(ctx(), 3, 2, CotKernel::CSC2), HighComplex(0, 256)));
    CHECK(approx_equal(ctx(), cot_pair_sum(ctx(), 2, 3, CotKernel::PLAIN),
                       HighComplex::from_rational(Rational(-2, 3), 256)));
    CHECK_THROWS_AS(cot_pair_sum(ctx(), 3, 4, CotKernel::SEC2), Error);
}

TEST_CASE("single-side theorems with root-sum right sides") {
    CHECK(single_theorem_check(ctx(), 2, 3, SingleTheorem::CPC).pass);
    CHECK(single_theorem_check(ctx(), 3, 5, SingleTheorem::CPCC2).pass);
    CHECK(single_theorem_check(ctx(), 4, 9, SingleTheorem::CPC3).pass);
    for (long p = 1; p <= 8; ++p)
        for (long q = 2; q <= 8; ++q) {
            if (p == q || gcd(p, q) != 1) continue;
            CAPTURE(p);
            CAPTURE(q);
            if (p >= 2) {
                CHECK(single_theorem_check(ctx(), p, q, SingleTheorem::CPC).pass);
                CHECK(single_theorem_check(ctx(), p, q, SingleTheorem::CPC3).pass);
                CHECK(single_theorem_check(ctx(), p, q, SingleTheorem::CPC3C2).pass);
            }
            CHECK(single_theorem_check(ctx(), p, q, SingleTheorem::S3T).pass);
            if (q % 2 == 1 && q >= 3)
                CHECK(single_theorem_check(ctx(), p, q, SingleTheorem::CPCC2).pass);
        }
}

TEST_CASE("two-term reciprocity laws at documented pairs") {
    CheckReport dc = reciprocity_check(ctx(), 2, 3, ReciprocityLaw::DEDEKIND_COT);
    CHECK(dc.pass);
    CHECK(reciprocity_rhs(2, 3, ReciprocityLaw::DEDEKIND_COT) == Rational(-4, 3));

    CheckReport tl = reciprocity_check(ctx(), 2, 3, ReciprocityLaw::T_LAW);
    CHECK(tl.pass);
    CHECK(reciprocity_rhs(2, 3, ReciprocityLaw::T_LAW) == Rational(-80));

    CheckReport ds = reciprocity_check(ctx(), 1, 3, ReciprocityLaw::DEDEKIND_S);
    CHECK(ds.pass);
    CHECK(ds.exact);
    CHECK(ds.lhs == "1/18");
}

TEST_CASE("every law passes on a small admissible grid") {
    static const ReciprocityLaw laws[] = {
        ReciprocityLaw::DEDEKIND_COT, ReciprocityLaw::DEDEKIND_S,   ReciprocityLaw::COT3,
        ReciprocityLaw::T_LAW,        ReciprocityLaw::SEC2_LAW,     ReciprocityLaw::COT3SEC2_LAW,
        ReciprocityLaw::CSC4_LAW,     ReciprocityLaw::CSC6_LAW};
    for (ReciprocityLaw law : laws) {
        for (long p = 1; p <= 11; ++p)
            for (long q = p + 1; q <= 11; ++q) {
                if (gcd(p, q) != 1) continue;
                if (!reciprocity_law_admissible(p, q, law)) continue;
                CAPTURE(reciprocity_law_name(law));
                CAPTURE(p);
                CAPTURE(q);
                CHECK(reciprocity_check(ctx(), p, q, law).pass);
            }
    }
}

TEST_CASE("perturbed right side fails") {
    CHECK_FALSE(reciprocity_check(ctx(), 2, 3, ReciprocityLaw::DEDEKIND_COT, 1).pass);
    CHECK_FALSE(reciprocity_check(ctx(), 1, 3, ReciprocityLaw::DEDEKIND_S, 1).pass);
    CHECK_FALSE(reciprocity_check(ctx(), 3, 5, ReciprocityLaw::CSC6_LAW, 1).pass);
}

TEST_CASE("four-sum reciprocity") {
    CHECK(four_sum_check(ctx(), 3, 5, 7, 11).pass);
    CheckReport degenerate = four_sum_check(ctx(), 1, 3, 5, 7);
    CHECK(degenerate.pass);
    CHECK(degenerate.note.find("outside") != std::string::npos);
    CHECK_THROWS_AS(four_sum_check(ctx(), 3, 5, 7, 9), Error);
    try {
        four_sum_check(ctx(), 3, 5, 7, 9);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
    }
}

#include <doctest.h>

#include "trigsum/twoperiod.hpp"

using namespace trigsum;

namespace {
const PrecisionContext& ctx() {
    static PrecisionContext c = make_context(256);
    return c;
}
}  // namespace

TEST_CASE("documented values") {
    CHECK(approx_equal(ctx(), two_period_bruteforce(ctx(), {2, 3, TwoPeriodKernel::CSC2}),
                       HighComplex(0, 256)));
    CHECK(approx_equal(ctx(), two_period_bruteforce(ctx(), {3, 4, TwoPeriodKernel::CSC2}),
                       HighComplex(16, 256)));
    CHECK(approx_equal(ctx(), two_period_bruteforce(ctx(), {3, 5, TwoPeriodKernel::SEC2}),
                       HighComplex(32, 256)));
    CHECK(two_period_closed_special({3, 7, TwoPeriodKernel::CSC2}) == Rational(96));
    CHECK(two_period_closed_special({3, 5, TwoPeriodKernel::SEC2}) == Rational(32));
    CHECK(two_period_closed_special({2, 3, TwoPeriodKernel::CSC2}) == Rational(0));
}

TEST_CASE("hypothesis and unsupported-identity errors") {
    CHECK_THROWS_AS(two_period_bruteforce(ctx(), {2, 4, TwoPeriodKernel::CSC2}), Error);
    CHECK_THROWS_AS(two_period_bruteforce(ctx(), {3, 4, TwoPeriodKernel::SEC2}), Error);
    try {
        two_period_closed_special({5, 7, TwoPeriodKernel::CSC2});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedIdentity);  // 7 = 2 (mod 5)
    }
}

TEST_CASE("semi-closed equals brute force on a small grid") {
    for (long p = 2; p <= 9; ++p) {
        for (long q = 2; q <= 9; ++q) {
            if (p == q || gcd(p, q) != 1) continue;
            TwoPeriodSpec spec{p, q, TwoPeriodKernel::CSC2};
            CAPTURE(p);
            CAPTURE(q);
            CHECK(approx_equal(ctx(), two_period_bruteforce(ctx(), spec),
                               two_period_semiclosed(ctx(), spec)));
            if (p % 2 == 1 && q % 2 == 1 && p >= 3 && q >= 3) {
                TwoPeriodSpec sspec{p, q, TwoPeriodKernel::SEC2};
                CHECK(approx_equal(ctx(), two_period_bruteforce(ctx(), sspec),
                                   two_period_semiclosed(ctx(), sspec)));
            }
        }
    }
    // larger pair with no closed value: the two paths must still agree
    TwoPeriodSpec big{5, 7, TwoPeriodKernel::CSC2};
    CHECK(approx_equal(ctx(), two_period_bruteforce(ctx(), big), two_period_semiclosed(ctx(), big)));
}

TEST_CASE("special closed forms agree with both paths where defined") {
    for (long p = 2; p <= 11; ++p) {
        for (long q = 2; q <= 11; ++q) {
            if (p == q || gcd(p, q) != 1) continue;
            if (!(q % p == 1 % p || (q + 1) % p == 0)) continue;
            TwoPeriodSpec spec{p, q, TwoPeriodKernel::CSC2};
            HighComplex closed =
                HighComplex::from_rational(two_period_closed_special(spec), 256);
            CAPTURE(p);
            CAPTURE(q);
            CHECK(approx_equal(ctx(), two_period_bruteforce(ctx(), spec), closed));
            CHECK(approx_equal(ctx(), two_period_semiclosed(ctx(), spec), closed));
        }
    }
}

TEST_CASE("swap symmetry of the csc2 sum") {
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 4}, {4, 9}, {5, 7}}) {
        HighComplex a = two_period_bruteforce(ctx(), {p, q, TwoPeriodKernel::CSC2});
        HighComplex b = two_period_bruteforce(ctx(), {q, p, TwoPeriodKernel::CSC2});
        CHECK(approx_equal(ctx(), a, b));
    }
}

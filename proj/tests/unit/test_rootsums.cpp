#include <doctest.h>

#include "trigsum/rootsums.hpp"

using namespace trigsum;

namespace {
const PrecisionContext& ctx() {
    static PrecisionContext c = make_context(256);
    return c;
}
}  // namespace

TEST_CASE("pole sum brute-force spot values") {
    // omit-pole range at +1, m=1: -(k-1)/2
    PoleSpec s1{5, Pole::PlusOne, 1, 0, SumRange::OmitPole};
    CHECK(approx_equal(ctx(), pole_sum_bruteforce(ctx(), s1), HighComplex(-2, 256)));
    // k=3, m=2 at +1: -(k-1)(k-5)/12 = 1/3
    PoleSpec s2{3, Pole::PlusOne, 2, 0, SumRange::OmitPole};
    CHECK(approx_equal(ctx(), pole_sum_bruteforce(ctx(), s2),
                       HighComplex::from_rational(Rational(1, 3), 256)));
    // k=1 full range at -1: single term 1/(1+1)
    PoleSpec s3{1, Pole::MinusOne, 1, 0, SumRange::Full};
    CHECK(approx_equal(ctx(), pole_sum_bruteforce(ctx(), s3),
                       HighComplex::from_rational(Rational(1, 2), 256)));
}

TEST_CASE("pole sum singular guards") {
    CHECK_THROWS_AS(pole_sum_bruteforce(ctx(), {5, Pole::PlusOne, 1, 0, SumRange::Full}), Error);
    CHECK_THROWS_AS(pole_sum_bruteforce(ctx(), {4, Pole::MinusOne, 1, 0, SumRange::OmitPole}), Error);
    CHECK_THROWS_AS(pole_sum_bruteforce(ctx(), {8, Pole::PlusI, 1, 0, SumRange::Full}), Error);
    try {
        pole_sum_bruteforce(ctx(), {5, Pole::PlusOne, 1, 0, SumRange::Full});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularTerm);
    }
}

TEST_CASE("pole sum closed spot values") {
    // k=5, pole +i, m=1: 5/(i+1) = 5/2 - (5/2) i
    GaussianRational v = pole_sum_closed({5, Pole::PlusI, 1, 0, SumRange::Full});
    CHECK(v == GaussianRational(Rational(5, 2), Rational(-5, 2)));
    // k=5, pole +1, m=4, a=1: (k-1)(k+1)(k^2-19)/720 = 1/5
    GaussianRational w = pole_sum_closed({5, Pole::PlusOne, 4, 1, SumRange::OmitPole});
    CHECK(w == GaussianRational(Rational(1, 5), Rational(0)));
    // parity violation
    CHECK_THROWS_AS(pole_sum_closed({4, Pole::MinusOne, 1, 0, SumRange::Full}), Error);
    try {
        pole_sum_closed({4, Pole::MinusOne, 1, 0, SumRange::OmitPole});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
    }
    // untabulated combination
    CHECK_THROWS_AS(pole_sum_closed({5, Pole::PlusI, 1, 1, SumRange::Full}), Error);
}

TEST_CASE("tabulated pole specs agree with the oracle up to k = 41") {
    for (long k = 1; k <= 41; ++k) {
        for (const PoleSpec& spec : tabulated_pole_specs(k)) {
            HighComplex brute = pole_sum_bruteforce(ctx(), spec);
            HighComplex closed = HighComplex::from_gaussian(pole_sum_closed(spec), 256);
            CAPTURE(spec.k);
            CAPTURE(static_cast<int>(spec.pole));
            CAPTURE(spec.m);
            CAPTURE(spec.a);
            CHECK(approx_equal(ctx(), brute, closed));
        }
    }
}

TEST_CASE("pole +i and -i closed forms are conjugate and branch-sensitive") {
    for (long k : {5L, 7L, 9L, 11L}) {
        for (int m = 1; m <= 4; ++m) {
            GaussianRational plus = pole_sum_closed({k, Pole::PlusI, m, 0, SumRange::Full});
            GaussianRational minus = pole_sum_closed({k, Pole::MinusI, m, 0, SumRange::Full});
            CHECK(plus.conj() == minus);
            GaussianRational wrong =
                pole_sum_closed_imaginary_branch({k, Pole::PlusI, m, 0, SumRange::Full}, k % 4 != 1);
            CHECK_FALSE(plus == wrong);
        }
    }
}

TEST_CASE("mixed sums spot values") {
    // lemr1 at (p=2, q=3): (q^2-1)/24 = 1/3
    CHECK(approx_equal(ctx(), mixed_sum_bruteforce(ctx(), 2, 3, RootSumShape::XiOver1Sq),
                       HighComplex::from_rational(Rational(1, 3), 256)));
    // (p=3, q=5): (25-1)/24 = 1
    CHECK(approx_equal(ctx(), mixed_sum_bruteforce(ctx(), 3, 5, RootSumShape::XiOver1Sq),
                       HighComplex(1, 256)));
    CHECK_THROWS_AS(mixed_sum_bruteforce(ctx(), 2, 4, RootSumShape::XiOver1Sq), Error);
    try {
        mixed_sum_bruteforce(ctx(), 2, 4, RootSumShape::XiOver1Sq);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Coprimality);
    }
}

TEST_CASE("mixed identity checks at the documented pairs") {
    CheckReport r1 = mixed_identity_check(ctx(), 2, 3, MixedIdentityId::LEMR22);
    CHECK(r1.pass);
    CHECK(r1.rhs.substr(0, 8) == std::string("2.083333"));  // 25/12
    CheckReport r2 = mixed_identity_check(ctx(), 3, 5, MixedIdentityId::LEMR1);
    CHECK(r2.pass);
    CHECK(r2.rhs == "1");
    CHECK_THROWS_AS(mixed_identity_check(ctx(), 3, 9, MixedIdentityId::LEMR1), Error);
}

TEST_CASE("every mixed identity passes on a small admissible grid") {
    static const MixedIdentityId ids[] = {
        MixedIdentityId::LEMR1,  MixedIdentityId::LEMR2,   MixedIdentityId::LEMR4,
        MixedIdentityId::LEMR21, MixedIdentityId::LEMR22,  MixedIdentityId::LEMR21P,
        MixedIdentityId::LEMR23, MixedIdentityId::LEMR24,  MixedIdentityId::LEMR1_1,
        MixedIdentityId::LEMR2_1};
    for (MixedIdentityId id : ids) {
        for (long p = 1; p <= 9; ++p) {
            for (long q = 2; q <= 9; ++q) {
                if (p == q || gcd(p, q) != 1) continue;
                if (!mixed_identity_admissible(p, q, id)) continue;
                CheckReport r = mixed_identity_check(ctx(), p, q, id);
                CAPTURE(mixed_identity_name(id));
                CAPTURE(p);
                CAPTURE(q);
                CHECK(r.pass);
            }
        }
    }
}

TEST_CASE("partial fraction checks at hand-picked points") {
    // (ONE_XZ, k=3, x=2): both sides 5/7
    DecompParams pr;
    pr.k = 3;
    CheckReport r = partial_fraction_check(ctx(), DecompId::ONE_XZ, pr, HighComplex(2, 256));
    CHECK(r.pass);
    // both sides equal 3*4/7 - 1 = 5/7
    CHECK(r.rhs.substr(0, 8) == std::string("0.714285"));

    DecompParams r_pr;
    r_pr.p = 2;
    r_pr.q = 3;
    HighComplex x(BigFloat(2L, 256), BigFloat(1L, 256));
    CHECK(partial_fraction_check(ctx(), DecompId::R, r_pr, x).pass);

    // near-singular guard
    DecompParams xk2;
    xk2.k = 5;
    HighComplex close(BigFloat(1L, 256) + BigFloat::pow2(-34, 256), BigFloat(0L, 256));
    CHECK_THROWS_AS(partial_fraction_check(ctx(), DecompId::XK2, xk2, close), Error);
    try {
        partial_fraction_check(ctx(), DecompId::XK2, xk2, close);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NearSingular);
    }
}

TEST_CASE("partial fraction identities across ids at fixed points") {
    HighComplex x1(BigFloat(Rational(5, 4), 256), BigFloat(Rational(3, 4), 256));
    HighComplex x2(BigFloat(Rational(-7, 8), 256), BigFloat(Rational(13, 8), 256));
    for (const HighComplex& x : {x1, x2}) {
        for (int m = 1; m <= 4; ++m) {
            DecompParams pr;
            pr.k = 5;
            pr.m = m;
            CHECK(partial_fraction_check(ctx(), DecompId::F_LOG, pr, x).pass);
        }
        DecompParams single;
        single.k = 7;
        single.p = 7;
        CHECK(partial_fraction_check(ctx(), DecompId::XP1, single, x).pass);
        CHECK(partial_fraction_check(ctx(), DecompId::ONE_XZ, single, x).pass);
        CHECK(partial_fraction_check(ctx(), DecompId::ONE_XZ2, single, x).pass);
        CHECK(partial_fraction_check(ctx(), DecompId::XK2, single, x).pass);
        CHECK(partial_fraction_check(ctx(), DecompId::PXK2, single, x).pass);
        DecompParams pq;
        pq.p = 3;
        pq.q = 5;
        CHECK(partial_fraction_check(ctx(), DecompId::R, pq, x).pass);
        CHECK(partial_fraction_check(ctx(), DecompId::R2, pq, x).pass);
    }
}

#include <doctest.h>

#include "trigsum/charsums.hpp"

using namespace trigsum;

namespace {
const PrecisionContext& ctx() {
    static PrecisionContext c = make_context(256);
    return c;
}

DirichletCharacter legendre(long p) { return jacobi_character(p); }

const DirichletCharacter* find_even_real(const std::vector<DirichletCharacter>& chars) {
    for (const auto& c : chars)
        if (c.is_real()) return &c;
    return nullptr;
}
}  // namespace

TEST_CASE("classical gauss sums") {
    DirichletCharacter chi5 = legendre(5);
    HighComplex g5 = gauss_sum(ctx(), chi5);
    CHECK(approx_equal(ctx(), g5, HighComplex(BigFloat(5L, 256).sqrt())));
    DirichletCharacter chi7 = legendre(7);
    HighComplex g7 = gauss_sum(ctx(), chi7);
    CHECK(approx_equal(ctx(), g7,
                       HighComplex(BigFloat(0L, 256), BigFloat(7L, 256).sqrt())));
    // z = 0 kills any non-principal sum
    CHECK(approx_equal(ctx(), gauss_sum(ctx(), chi5, HighComplex(0, 256)), HighComplex(0, 256)));
}

TEST_CASE("gauss sum periodicity in z") {
    DirichletCharacter chi = legendre(7);
    HighComplex z(BigFloat(0.75, 256), BigFloat(-0.4, 256));
    HighComplex zk = z + HighComplex(7, 256);
    CHECK(approx_equal(ctx(), gauss_sum(ctx(), chi, zk), gauss_sum(ctx(), chi, z)));
}

TEST_CASE("factorization conventions") {
    CheckReport real_case = factorization_check(ctx(), legendre(5), 2);
    CHECK(real_case.pass);
    CHECK(real_case.note.find("both conventions") != std::string::npos);
    // a complex cubic character mod 7: the conjugate convention holds
    auto sevens = characters_mod(7, CharacterFilter::EvenNonprincipal);
    REQUIRE(sevens.size() == 2);
    CheckReport complex_case = factorization_check(ctx(), sevens[0], 2);
    CHECK(complex_case.pass);
    CHECK(complex_case.note.find("convention") != std::string::npos);
    CheckReport trivial_n = factorization_check(ctx(), sevens[0], 1);
    CHECK(trivial_n.pass);
}

TEST_CASE("sin and cos ratio sums against the closed path") {
    for (long p : {5L, 13L}) {
        auto chars = characters_mod(p, CharacterFilter::EvenNonprincipal);
        for (const auto& chi : chars) {
            for (long a : {3L, 5L, 7L, 9L}) {
                CharSumSpec spec;
                spec.chi1 = &chi;
                spec.a = a;
                spec.variant = CharSumVariant::SIN_RATIO;
                CAPTURE(p);
                CAPTURE(chi.index());
                CAPTURE(a);
                CHECK(char_sum_check(ctx(), spec).pass);
                spec.variant = CharSumVariant::COS_RATIO;
                CHECK(char_sum_check(ctx(), spec).pass);
            }
        }
    }
}

TEST_CASE("example 1: a = 3 gives sqrt(p) for the quadratic character") {
    for (long p : {5L, 13L, 17L}) {
        auto chars = characters_mod(p, CharacterFilter::EvenNonprincipal);
        const DirichletCharacter* chi = find_even_real(chars);
        REQUIRE(chi != nullptr);
        CharSumSpec spec;
        spec.chi1 = chi;
        spec.a = 3;
        spec.variant = CharSumVariant::SIN_RATIO;
        HighComplex rhs(BigFloat(p, 256).sqrt());
        CHECK(approx_equal(ctx(), char_sum_bruteforce(ctx(), spec), rhs));
        spec.variant = CharSumVariant::COS_RATIO;
        CHECK(approx_equal(ctx(), char_sum_bruteforce(ctx(), spec), rhs));
    }
}

TEST_CASE("the a = 5 worked-example discrepancy is resolved by the oracle") {
    auto chars = characters_mod(13, CharacterFilter::EvenNonprincipal);
    const DirichletCharacter* chi = find_even_real(chars);
    REQUIRE(chi != nullptr);
    CheckReport sin_case = example2_discrepancy_check(ctx(), *chi, false);
    CHECK(sin_case.pass);
    CHECK(sin_case.note.find("candidate[formula]") != std::string::npos);
    CHECK(sin_case.note.find("candidate[example]") != std::string::npos);
    CHECK(sin_case.note.find("displayed constant-extraction formula") != std::string::npos);
    CheckReport cos_case = example2_discrepancy_check(ctx(), *chi, true);
    CHECK(cos_case.pass);
    CHECK(cos_case.note.find("displayed constant-extraction formula") != std::string::npos);
}

TEST_CASE("multi-sin sums and the single-factor reduction") {
    auto chars = characters_mod(13, CharacterFilter::EvenNonprincipal);
    for (const auto& chi : chars) {
        for (const auto& alist : std::vector<std::vector<long>>{{3, 3}, {3, 5}, {3, 5, 7}}) {
            CharSumSpec spec;
            spec.variant = CharSumVariant::MULTI_SIN;
            spec.chi1 = &chi;
            spec.a_list = alist;
            CAPTURE(chi.index());
            CHECK(char_sum_check(ctx(), spec).pass);
        }
        CharSumSpec single;
        single.variant = CharSumVariant::MULTI_SIN;
        single.chi1 = &chi;
        single.a_list = {5};
        CharSumSpec ratio;
        ratio.variant = CharSumVariant::SIN_RATIO;
        ratio.chi1 = &chi;
        ratio.a = 5;
        CHECK(approx_equal(ctx(), char_sum_closed(ctx(), single), char_sum_closed(ctx(), ratio)));
    }
}

TEST_CASE("two-character two-period balance") {
    auto c5 = characters_mod(5, CharacterFilter::Nonprincipal);
    auto c7 = characters_mod(7, CharacterFilter::Nonprincipal);
    for (const auto& chi1 : c5) {
        for (const auto& chi2 : c7) {
            CharSumSpec spec;
            spec.variant = CharSumVariant::TWO_CHAR;
            spec.chi1 = &chi1;
            spec.chi2 = &chi2;
            spec.a1 = spec.a2 = 1;
            spec.b1 = 2;
            spec.b2 = 2;
            CAPTURE(chi1.index());
            CAPTURE(chi2.index());
            CHECK(char_sum_check(ctx(), spec).pass);
            spec.b1 = 4;
            spec.b2 = 4;
            CHECK(char_sum_check(ctx(), spec).pass);
        }
    }
}

TEST_CASE("hypothesis errors name the failing inequality") {
    auto chars = characters_mod(13, CharacterFilter::EvenNonprincipal);
    CharSumSpec spec;
    spec.chi1 = &chars[0];
    spec.a = 4;  // even
    CHECK_THROWS_AS(char_sum_bruteforce(ctx(), spec), Error);
    spec.a = 31;  // a - 3 = 28 >= 2p = 26
    try {
        char_sum_bruteforce(ctx(), spec);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
        CHECK(std::string(e.what()).find("a - 3 < 2p") != std::string::npos);
    }
    // odd character rejected for the ratio variants
    auto odd7 = characters_mod(7, CharacterFilter::Odd);
    REQUIRE(!odd7.empty());
    CharSumSpec odd_spec;
    odd_spec.chi1 = &odd7[0];
    odd_spec.a = 3;
    CHECK_THROWS_AS(char_sum_bruteforce(ctx(), odd_spec), Error);
}

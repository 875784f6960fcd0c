#include <doctest.h>

#include "trigsum/characters.hpp"

using namespace trigsum;

namespace {
const PrecisionContext& ctx() {
    static PrecisionContext c = make_context(256);
    return c;
}
}  // namespace

TEST_CASE("jacobi symbol") {
    CHECK(jacobi_symbol(1, 15) == 1);
    CHECK(jacobi_symbol(2, 15) == 1);  // (2|3)(2|5) = (-1)(-1)
    CHECK(jacobi_symbol(3, 9) == 0);
    CHECK(jacobi_symbol(2, 7) == 1);
    CHECK(jacobi_symbol(5, 7) == -1);
    CHECK(jacobi_symbol(-1, 7) == -1);  // 7 = 3 (mod 4)
    CHECK(jacobi_symbol(-1, 13) == 1);
    CHECK(jacobi_symbol(10, 1) == 1);
    CHECK_THROWS_AS(jacobi_symbol(3, 8), Error);
}

TEST_CASE("character group sizes and parity counts") {
    CHECK(characters_mod(1).size() == 1);
    CHECK(characters_mod(2).size() == 1);
    auto mod5 = characters_mod(5);
    CHECK(mod5.size() == 4);
    CHECK(characters_mod(5, CharacterFilter::Even).size() == 2);
    CHECK(characters_mod(7, CharacterFilter::EvenNonprincipal).size() == 2);
    // composite and two-power moduli via the generator structure
    CHECK(characters_mod(12).size() == 4);
    CHECK(characters_mod(16).size() == 8);
    CHECK(characters_mod(24).size() == 8);
    CHECK(characters_mod(101).size() == 100);
    // half of the characters of any group with -1 != 1 are even
    CHECK(characters_mod(16, CharacterFilter::Even).size() == 4);
    CHECK(characters_mod(101, CharacterFilter::Even).size() == 50);
}

TEST_CASE("character values are multiplicative roots of unity") {
    for (long k : {5L, 7L, 12L, 16L, 45L}) {
        for (const auto& chi : characters_mod(k)) {
            for (long a = 1; a < k; ++a) {
                if (!chi.is_unit(a)) continue;
                for (long b = a; b < k; ++b) {
                    if (!chi.is_unit(b)) continue;
                    HighComplex lhs = chi.value(ctx(), a * b);
                    HighComplex rhs = chi.value(ctx(), a) * chi.value(ctx(), b);
                    CHECK(approx_equal(ctx(), lhs, rhs));
                }
            }
        }
    }
}

TEST_CASE("orthogonality: non-principal characters sum to zero") {
    for (long k : {5L, 7L, 13L, 12L, 16L}) {
        for (const auto& chi : characters_mod(k, CharacterFilter::Nonprincipal)) {
            HighComplex acc(0, 256);
            for (long n = 1; n <= k; ++n)
                if (chi.is_unit(n)) acc += chi.value(ctx(), n);
            CHECK(approx_equal(ctx(), acc, HighComplex(0, 256)));
        }
    }
}

TEST_CASE("jacobi character matches the symbol and detects parity") {
    DirichletCharacter chi7 = jacobi_character(7);
    CHECK_FALSE(chi7.is_even());  // 7 = 3 (mod 4)
    DirichletCharacter chi13 = jacobi_character(13);
    CHECK(chi13.is_even());
    for (long n = 1; n < 13; ++n)
        CHECK(chi13.real_value(n) == jacobi_symbol(n, 13));
}

TEST_CASE("character moment M") {
    // M(7, legendre) = 1 + 2 - 3 + 4 - 5 - 6 = -7
    CHECK(char_moment_M(jacobi_character(7)).to_rational() == Rational(-7));
    CHECK(char_moment_M(jacobi_character(11)).to_rational() == Rational(-11));
    // principal character mod 3: 1 + 2 = 3
    auto mod3 = characters_mod(3);
    const DirichletCharacter* principal = nullptr;
    for (auto& c : mod3)
        if (c.is_principal()) principal = &c;
    REQUIRE(principal != nullptr);
    CHECK(char_moment_M(*principal).to_rational() == Rational(3));
}

TEST_CASE("class numbers") {
    struct Entry {
        long k, h;
    };
    for (Entry e : {Entry{7, 1}, {11, 1}, {19, 1}, {23, 3}, {31, 3}, {43, 1}, {47, 5}, {59, 3},
                    {67, 1}, {71, 7}}) {
        CHECK(class_number(e.k) == e.h);
    }
    // composite squarefree modulus: h(-15) = 2
    CHECK(class_number(15) == 2);
    CHECK_THROWS_AS(class_number(13), Error);  // 13 = 1 (mod 4)
    CHECK_THROWS_AS(class_number(27), Error);  // not squarefree
    try {
        class_number(27);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
    }
}

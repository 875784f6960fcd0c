#pragma once

#include <limits>
#include <map>
#include <vector>

#include "trigsum/numeric.hpp"

namespace trigsum {

/// Truncated Laurent series in a formal variable mu: finitely many terms
/// c_e * mu^e with e >= floor. floor = EXACT marks a finite polynomial with
/// no discarded tail; products propagate the reliable floor.
class LaurentSeries {
public:
    static constexpr long EXACT = std::numeric_limits<long>::min();

    LaurentSeries() = default;

    static LaurentSeries monomial(long exponent, const HighComplex& coeff);
    static LaurentSeries zero() { return LaurentSeries(); }

    void add_term(long exponent, const HighComplex& coeff);
    void set_floor(long floor) { floor_ = floor; }

    long floor() const { return floor_; }
    bool exact() const { return floor_ == EXACT; }
    long max_exponent() const;  // EXACT sentinel when empty
    const std::map<long, HighComplex>& coefficients() const { return coeffs_; }

    /// Coefficient of mu^e (zero when absent, regardless of floor).
    HighComplex coefficient(long e, mpfr_prec_t prec) const;

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);

private:
    std::map<long, HighComplex> coeffs_;
    long floor_ = EXACT;
};

/// Constant term of the product of the factors. Fails with a truncation
/// error when the propagated floor shows the constant term could have lost
/// contributions from discarded tails.
HighComplex series_product_constant_term(const std::vector<LaurentSeries>& factors,
                                         mpfr_prec_t prec);

/// Geometric-type tails used by the character-sum constants, truncated at
/// `floor` (inclusive):
///   sum_{m>=0} mu^(-step m), sum (-1)^m mu^(-step m),
///   sum binom(r + m - 1, r - 1) mu^(-step m)  (binomial tail of order r).
LaurentSeries geometric_tail(long step, long floor, mpfr_prec_t prec);
LaurentSeries alternating_tail(long step, long floor, mpfr_prec_t prec);
LaurentSeries binomial_tail(long order, long step, long floor, mpfr_prec_t prec);

}  // namespace trigsum

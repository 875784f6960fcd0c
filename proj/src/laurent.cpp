#include "trigsum/laurent.hpp"

#include "trigsum/errors.hpp"

namespace trigsum {

LaurentSeries LaurentSeries::monomial(long exponent, const HighComplex& coeff) {
    LaurentSeries s;
    s.add_term(exponent, coeff);
    return s;
}

void LaurentSeries::add_term(long exponent, const HighComplex& coeff) {
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end())
        coeffs_.emplace(exponent, coeff);
    else
        it->second += coeff;
}

long LaurentSeries::max_exponent() const {
    if (coeffs_.empty()) return EXACT;
    return coeffs_.rbegin()->first;
}

HighComplex LaurentSeries::coefficient(long e, mpfr_prec_t prec) const {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) return HighComplex(0, prec);
    return it->second;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out;
    // The unknown tail of one factor meets the largest retained exponent of
    // the other; below that the product coefficients are unreliable.
    long floor = LaurentSeries::EXACT;
    if (!a.exact() && !b.coeffs_.empty()) {
        long f = a.floor_ + b.max_exponent();
        floor = std::max(floor, f);
    }
    if (!b.exact() && !a.coeffs_.empty()) {
        long f = b.floor_ + a.max_exponent();
        floor = std::max(floor, f);
    }
    out.floor_ = floor;
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            if (floor != LaurentSeries::EXACT && e < floor) continue;
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out = a;
    out.floor_ = std::max(a.floor_, b.floor_);
    for (const auto& [e, c] : b.coeffs_) out.add_term(e, c);
    if (out.floor_ != LaurentSeries::EXACT) {
        for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
            if (it->first < out.floor_)
                it = out.coeffs_.erase(it);
            else
                ++it;
        }
    }
    return out;
}

HighComplex series_product_constant_term(const std::vector<LaurentSeries>& factors,
                                         mpfr_prec_t prec) {
    if (factors.empty()) throw Error(ErrorKind::Usage, "empty factor list");
    LaurentSeries prod = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) prod = prod * factors[i];
    if (!prod.exact() && prod.floor() > 0)
        throw Error(ErrorKind::Truncation,
                    "truncation too shallow: constant term unreliable (floor " +
                        std::to_string(prod.floor()) + ")");
    return prod.coefficient(0, prec);
}

LaurentSeries geometric_tail(long step, long floor, mpfr_prec_t prec) {
    if (step <= 0) throw Error(ErrorKind::Usage, "tail step must be positive");
    LaurentSeries s;
    for (long e = 0; e >= floor; e -= step) s.add_term(e, HighComplex(1, prec));
    s.set_floor(floor);
    return s;
}

LaurentSeries alternating_tail(long step, long floor, mpfr_prec_t prec) {
    if (step <= 0) throw Error(ErrorKind::Usage, "tail step must be positive");
    LaurentSeries s;
    long sign = 1;
    for (long e = 0; e >= floor; e -= step, sign = -sign)
        s.add_term(e, HighComplex(sign, prec));
    s.set_floor(floor);
    return s;
}

LaurentSeries binomial_tail(long order, long step, long floor, mpfr_prec_t prec) {
    if (step <= 0) throw Error(ErrorKind::Usage, "tail step must be positive");
    if (order < 1) throw Error(ErrorKind::Usage, "tail order must be >= 1");
    LaurentSeries s;
    // binom(order - 1 + m, order - 1), updated incrementally
    Rational coeff(1);
    long m = 0;
    for (long e = 0; e >= floor; e -= step, ++m) {
        s.add_term(e, HighComplex::from_rational(coeff, prec));
        coeff = coeff * Rational(order + m) / Rational(m + 1);
    }
    s.set_floor(floor);
    return s;
}

}  // namespace trigsum

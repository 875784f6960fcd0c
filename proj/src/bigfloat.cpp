#include "trigsum/bigfloat.hpp"

#include <cstdio>
#include <vector>

#include "trigsum/rational.hpp"

namespace trigsum {

BigFloat::BigFloat(const Rational& value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.raw(), MPFR_RNDN);
}

std::string BigFloat::str() const {
    if (mpfr_zero_p(v_)) return "0";
    // ceil(prec * log10(2)) + 2 digits round-trips the mantissa.
    long digits = static_cast<long>(static_cast<double>(precision()) * 0.30103) + 2;
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), v_);
    return std::string(buf.data());
}

}  // namespace trigsum

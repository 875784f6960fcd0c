#include "trigsum/rational.hpp"

#include <stdexcept>

#include "trigsum/errors.hpp"

namespace trigsum {

Rational::Rational(long n, long d) {
    if (d == 0) throw Error(ErrorKind::InvalidModulus, "rational with zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
    mpq_t den;
    mpq_init(den);
    mpq_set_si(den, d, 1);
    mpq_div(v_, v_, den);
    mpq_clear(den);
}

Rational::Rational(const std::string& s) {
    mpq_init(v_);
    if (mpq_set_str(v_, s.c_str(), 10) != 0) {
        mpq_clear(v_);
        throw Error(ErrorKind::Parse, "malformed rational literal: " + s);
    }
    mpq_canonicalize(v_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorKind::SingularTerm, "rational division by zero");
    Rational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
}

Rational Rational::floor() const {
    Rational r;
    mpz_t q;
    mpz_init(q);
    mpz_fdiv_q(q, mpq_numref(v_), mpq_denref(v_));
    mpq_set_z(r.v_, q);
    mpz_clear(q);
    return r;
}

std::string Rational::str() const {
    char* raw = mpq_get_str(nullptr, 10, v_);
    std::string out(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, out.size() + 1);
    return out;
}

Rational Rational::pow(const Rational& base, unsigned long e) {
    Rational r(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational norm = b.re() * b.re() + b.im() * b.im();
    if (norm.is_zero()) throw Error(ErrorKind::SingularTerm, "gaussian-rational division by zero");
    GaussianRational num = a * b.conj();
    return {num.re() / norm, num.im() / norm};
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.str();
    s += (im_.sign() < 0) ? " - " : " + ";
    s += im_.abs().str();
    s += "i";
    return s;
}

}  // namespace trigsum

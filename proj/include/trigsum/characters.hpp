#pragma once

#include <map>
#include <string>
#include <vector>

#include "trigsum/numeric.hpp"

namespace trigsum {

/// Dirichlet character mod k with exact root-of-unity values: chi(n) =
/// zeta_order^exponent(n) on residues coprime to k, 0 elsewhere.
class DirichletCharacter {
public:
    DirichletCharacter(long modulus, long order, std::vector<long> exponents, long index);

    long modulus() const { return modulus_; }
    long order() const { return order_; }
    long index() const { return index_; }
    std::string name() const;

    bool is_principal() const { return order_ == 1; }
    bool is_even() const { return even_; }
    bool is_real() const { return order_ <= 2; }

    /// gcd(n, k) > 1 => false; value then irrelevant.
    bool is_unit(long n) const;
    /// Exponent e with chi(n) = zeta_order^e; n coprime to modulus.
    long exponent(long n) const;
    /// chi(n) at context precision (0 when gcd(n, k) > 1).
    HighComplex value(const PrecisionContext& ctx, long n) const;
    /// For real characters: -1, 0 or +1.
    long real_value(long n) const;

    /// The conjugate character (values inverted on the unit circle).
    DirichletCharacter conjugate() const;

private:
    long modulus_;
    long order_;
    std::vector<long> exponents_;  // indexed by n mod k; -1 marks non-units
    long index_;
    bool even_;
};

enum class CharacterFilter { All, Even, Odd, Real, Nonprincipal, EvenNonprincipal };

/// Complete duplicate-free character group mod k (prime-power decomposition,
/// two-generator structure for 2^e), in a canonical enumeration order.
std::vector<DirichletCharacter> characters_mod(long k, CharacterFilter filter = CharacterFilter::All);

/// Jacobi symbol (a | n) for odd n >= 1.
int jacobi_symbol(long a, long n);

/// The real character n -> (n | k) for odd k.
DirichletCharacter jacobi_character(long k);

/// Exact M(k, chi) = sum_{j=1}^{k} j chi(j) as integer coefficients over
/// powers of zeta_order.
struct CyclotomicInteger {
    long order = 1;
    std::map<long, Rational> coeffs;  // exponent -> coefficient

    HighComplex to_complex(const PrecisionContext& ctx) const;
    /// Defined when order <= 2 (values are +-1): the exact rational value.
    Rational to_rational() const;
    std::string str() const;
};

CyclotomicInteger char_moment_M(const DirichletCharacter& chi);

/// h(-k) = -M(k, chi)/k for squarefree k = 3 (mod 4), k >= 7, chi = (.|k).
long class_number(long k);

}  // namespace trigsum

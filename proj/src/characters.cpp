#include "trigsum/characters.hpp"

#include <algorithm>
#include <numeric>

namespace trigsum {

namespace {

long mod_pow(long base, long e, long m) {
    long r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (e > 0) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

long lcm_long(long a, long b) { return a / gcd(a, b) * b; }

// One cyclic factor of (Z/k)^*; a prime power contributes one factor (odd p,
// 4) or two (2^e with e >= 3: <-1> x <5>).
struct GroupComponent {
    long prime_power;
    long order;
};

long primitive_root_mod_prime_power(long p, long e) {
    long pe = 1;
    for (long i = 0; i < e; ++i) pe *= p;
    long phi_p = p - 1;
    // factor p-1
    std::vector<long> prime_factors;
    long t = phi_p;
    for (long f = 2; f * f <= t; ++f) {
        if (t % f == 0) {
            prime_factors.push_back(f);
            while (t % f == 0) t /= f;
        }
    }
    if (t > 1) prime_factors.push_back(t);
    long g = 0;
    for (long cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (long f : prime_factors) {
            if (mod_pow(cand, phi_p / f, p) == 1) { ok = false; break; }
        }
        if (ok) { g = cand; break; }
    }
    if (e == 1) return g;
    // lift: g stays primitive mod p^e unless g^(p-1) = 1 (mod p^2)
    long p2 = p * p;
    if (mod_pow(g % p2, p - 1, p2) == 1) g += p;
    return g % pe;
}

// Components of (Z/k)^* plus, for every residue class mod k, its exponent
// tuple with respect to the component generators.
struct UnitGroup {
    std::vector<GroupComponent> components;
    std::vector<std::vector<long>> dlogs;  // indexed by n mod k; empty for non-units
};

UnitGroup unit_group(long k) {
    UnitGroup g;
    g.dlogs.assign(static_cast<size_t>(k), {});

    struct PrimePowerTable {
        long pe;
        long ncomp;
        std::vector<std::vector<long>> table;  // residue mod pe -> exponents
    };
    std::vector<PrimePowerTable> tables;

    long rest = k;
    long e2 = 0;
    while (rest % 2 == 0) { rest /= 2; ++e2; }
    if (e2 == 1) {
        // (Z/2)^* is trivial; contributes nothing
    } else if (e2 == 2) {
        g.components.push_back({4, 2});
        PrimePowerTable t{4, 1, std::vector<std::vector<long>>(4)};
        t.table[1] = {0};
        t.table[3] = {1};
        tables.push_back(std::move(t));
    } else if (e2 >= 3) {
        long m = 1L << e2;
        long half_order = 1L << (e2 - 2);
        g.components.push_back({m, 2});           // <-1>
        g.components.push_back({m, half_order});  // <5>
        PrimePowerTable t{m, 2, std::vector<std::vector<long>>(static_cast<size_t>(m))};
        long pw = 1;
        for (long b = 0; b < half_order; ++b) {
            t.table[static_cast<size_t>(pw)] = {0, b};
            t.table[static_cast<size_t>(m - pw)] = {1, b};
            pw = pw * 5 % m;
        }
        tables.push_back(std::move(t));
    }
    auto add_odd_prime_power = [&](long p, long e) {
        long pe = 1;
        for (long i = 0; i < e; ++i) pe *= p;
        long phi = pe / p * (p - 1);
        long root = primitive_root_mod_prime_power(p, e);
        g.components.push_back({pe, phi});
        PrimePowerTable t{pe, 1, std::vector<std::vector<long>>(static_cast<size_t>(pe))};
        long cur = 1;
        for (long j = 0; j < phi; ++j) {
            t.table[static_cast<size_t>(cur)] = {j};
            cur = cur * root % pe;
        }
        tables.push_back(std::move(t));
    };
    for (long p = 3; p * p <= rest; p += 2) {
        if (rest % p != 0) continue;
        long e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        add_odd_prime_power(p, e);
    }
    if (rest > 1) add_odd_prime_power(rest, 1);

    for (long n = 0; n < k; ++n) {
        if (gcd(n, k) != 1) continue;
        std::vector<long> exps;
        for (const auto& t : tables) {
            const auto& e = t.table[static_cast<size_t>(n % t.pe)];
            exps.insert(exps.end(), e.begin(), e.end());
        }
        g.dlogs[static_cast<size_t>(n)] = std::move(exps);
    }
    return g;
}

}  // namespace

DirichletCharacter::DirichletCharacter(long modulus, long order, std::vector<long> exponents,
                                       long index)
    : modulus_(modulus), order_(order), exponents_(std::move(exponents)), index_(index) {
    long m1 = (modulus_ - 1) % modulus_;
    even_ = (modulus_ <= 2) || exponents_[static_cast<size_t>(m1)] == 0;
}

std::string DirichletCharacter::name() const {
    return "chi_" + std::to_string(modulus_) + "_" + std::to_string(index_);
}

bool DirichletCharacter::is_unit(long n) const {
    long r = n % modulus_;
    if (r < 0) r += modulus_;
    return exponents_[static_cast<size_t>(r)] >= 0;
}

long DirichletCharacter::exponent(long n) const {
    long r = n % modulus_;
    if (r < 0) r += modulus_;
    long e = exponents_[static_cast<size_t>(r)];
    if (e < 0) throw Error(ErrorKind::UnsupportedIdentity, "character value at non-unit residue");
    return e;
}

HighComplex DirichletCharacter::value(const PrecisionContext& ctx, long n) const {
    long r = n % modulus_;
    if (r < 0) r += modulus_;
    long e = exponents_[static_cast<size_t>(r)];
    if (e < 0) return HighComplex(0, ctx.precision_bits);
    return root_of_unity(ctx, order_, e);
}

long DirichletCharacter::real_value(long n) const {
    if (!is_real()) throw Error(ErrorKind::UnsupportedIdentity, "character is not real");
    long r = n % modulus_;
    if (r < 0) r += modulus_;
    long e = exponents_[static_cast<size_t>(r)];
    if (e < 0) return 0;
    return (e == 0) ? 1 : -1;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<long> exps = exponents_;
    for (auto& e : exps)
        if (e > 0) e = order_ - e;
    return DirichletCharacter(modulus_, order_, std::move(exps), index_);
}

std::vector<DirichletCharacter> characters_mod(long k, CharacterFilter filter) {
    if (k < 1) throw Error(ErrorKind::InvalidModulus, "characters_mod requires k >= 1");
    std::vector<DirichletCharacter> out;

    if (k == 1) {
        // the trivial character: chi(n) = 1 for all n
        out.emplace_back(1, 1, std::vector<long>{0}, 0);
    } else {
        UnitGroup group = unit_group(k);
        const auto& comps = group.components;
        long ncomp = static_cast<long>(comps.size());
        long group_exponent = 1;
        for (auto& c : comps) group_exponent = lcm_long(group_exponent, c.order);

        std::vector<long> tuple(static_cast<size_t>(ncomp), 0);
        long index = 0;
        while (true) {
            // character order = lcm over components of m_i / gcd(m_i, t_i)
            long ord = 1;
            for (long i = 0; i < ncomp; ++i)
                ord = lcm_long(ord, comps[static_cast<size_t>(i)].order /
                                        gcd(comps[static_cast<size_t>(i)].order,
                                            tuple[static_cast<size_t>(i)]));
            std::vector<long> exps(static_cast<size_t>(k), -1);
            for (long n = 0; n < k; ++n) {
                const auto& dl = group.dlogs[static_cast<size_t>(n)];
                if (dl.empty() && gcd(n, k) != 1) continue;
                long e = 0;
                for (long i = 0; i < ncomp; ++i) {
                    long m = comps[static_cast<size_t>(i)].order;
                    long contrib = tuple[static_cast<size_t>(i)] * dl[static_cast<size_t>(i)] % m;
                    e = (e + contrib * (group_exponent / m)) % group_exponent;
                }
                // reduce exponent from group_exponent to the character order
                exps[static_cast<size_t>(n)] = e / (group_exponent / ord) % ord;
            }
            out.emplace_back(k, ord, std::move(exps), index++);
            // next tuple
            long i = 0;
            for (; i < ncomp; ++i) {
                if (++tuple[static_cast<size_t>(i)] < comps[static_cast<size_t>(i)].order) break;
                tuple[static_cast<size_t>(i)] = 0;
            }
            if (i == ncomp) break;
        }
    }

    std::vector<DirichletCharacter> filtered;
    for (auto& chi : out) {
        bool keep = true;
        switch (filter) {
            case CharacterFilter::All: keep = true; break;
            case CharacterFilter::Even: keep = chi.is_even(); break;
            case CharacterFilter::Odd: keep = !chi.is_even(); break;
            case CharacterFilter::Real: keep = chi.is_real(); break;
            case CharacterFilter::Nonprincipal: keep = !chi.is_principal(); break;
            case CharacterFilter::EvenNonprincipal: keep = chi.is_even() && !chi.is_principal(); break;
        }
        if (keep) filtered.push_back(std::move(chi));
    }
    return filtered;
}

int jacobi_symbol(long a, long n) {
    if (n < 1 || n % 2 == 0)
        throw Error(ErrorKind::InvalidModulus, "jacobi symbol requires odd n >= 1");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return (n == 1) ? result : 0;
}

DirichletCharacter jacobi_character(long k) {
    if (k < 1 || k % 2 == 0)
        throw Error(ErrorKind::InvalidModulus, "jacobi character requires odd k");
    std::vector<long> exps(static_cast<size_t>(k == 1 ? 1 : k), -1);
    if (k == 1) exps[0] = 0;
    bool principal = true;
    for (long n = 0; n < k; ++n) {
        if (gcd(n, k) != 1) continue;
        int v = jacobi_symbol(n, k);
        exps[static_cast<size_t>(n)] = (v == 1) ? 0 : 1;
        if (v != 1) principal = false;
    }
    return DirichletCharacter(k, principal ? 1 : 2, std::move(exps), -1);
}

HighComplex CyclotomicInteger::to_complex(const PrecisionContext& ctx) const {
    HighComplex acc(0, ctx.precision_bits);
    for (const auto& [e, c] : coeffs)
        acc += root_of_unity(ctx, order, e) * HighComplex::from_rational(c, ctx.precision_bits);
    return acc;
}

Rational CyclotomicInteger::to_rational() const {
    if (order > 2)
        throw Error(ErrorKind::UnsupportedIdentity, "cyclotomic value is not rational");
    Rational acc(0);
    for (const auto& [e, c] : coeffs) acc += (e % 2 == 0) ? c : -c;
    return acc;
}

std::string CyclotomicInteger::str() const {
    std::string s;
    for (const auto& [e, c] : coeffs) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*z" + std::to_string(order) + "^" + std::to_string(e);
    }
    return s.empty() ? "0" : s;
}

CyclotomicInteger char_moment_M(const DirichletCharacter& chi) {
    CyclotomicInteger m;
    m.order = chi.order();
    for (long j = 1; j <= chi.modulus(); ++j) {
        if (!chi.is_unit(j)) continue;
        m.coeffs[chi.exponent(j)] += Rational(j);
    }
    return m;
}

long class_number(long k) {
    if (k < 7 || k % 4 != 3)
        throw Error(ErrorKind::HypothesisViolated, "class number formula requires k = 3 (mod 4), k >= 7");
    for (long f = 2; f * f <= k; ++f)
        if (k % (f * f) == 0)
            throw Error(ErrorKind::HypothesisViolated, "class number formula requires squarefree k");
    DirichletCharacter chi = jacobi_character(k);
    Rational m = char_moment_M(chi).to_rational();
    Rational h = -m / Rational(k);
    if (!h.is_integer() || h.sign() <= 0)
        throw Error(ErrorKind::HypothesisViolated, "class number formula produced a non-positive value");
    // k <= ~10^9 keeps this in long comfortably
    Rational digits = h;
    long out = std::stol(digits.str());
    return out;
}

}  // namespace trigsum

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wzaudit/hyperterm.hpp"

namespace wzaudit {

namespace {

struct FactorialAtom {
    LinearForm arg;
    int exponent;
};

// C(T,B)^p = T!^p * B!^-p * (T-B)!^-p
std::vector<FactorialAtom> factorial_atoms(const HypergeometricTerm& term, int sign = 1) {
    std::vector<FactorialAtom> atoms;
    for (const auto& f : term.binoms) {
        const int p = f.power * sign;
        atoms.push_back({f.top, p});
        atoms.push_back({f.bottom, -p});
        atoms.push_back({{f.top.a - f.bottom.a, f.top.b - f.bottom.b, f.top.c - f.bottom.c}, -p});
    }
    return atoms;
}

// Multiset of linear factors with signed exponents. Each factor is stored
// primitive with a positive leading coefficient; the scalar absorbs the rest.
class LinearProduct {
public:
    void multiply(LinearForm lf, int exponent) {
        if (exponent == 0) return;
        if (lf.a == 0 && lf.b == 0) {
            scalar_ *= rational_pow(Integer(static_cast<long>(lf.c)), exponent);
            return;
        }
        std::int64_t g = std::gcd(std::gcd(lf.a, lf.b), lf.c);
        const bool flip = lf.a < 0 || (lf.a == 0 && lf.b < 0);
        if (flip) g = -g;
        lf = {lf.a / g, lf.b / g, lf.c / g};
        scalar_ *= rational_pow(Integer(static_cast<long>(g)), exponent);
        const auto key = std::tuple{lf.a, lf.b, lf.c};
        exponents_[key] += exponent;
    }

    void scale(const Rational& r) { scalar_ *= r; }

    RationalFunction to_rational_function() const {
        BivarPoly num(scalar_);
        std::vector<BivarPoly> den;
        for (const auto& [key, e] : exponents_) {
            const auto [a, b, c] = key;
            const BivarPoly p = BivarPoly::linear(a, b, c);
            if (e > 0) num *= p.pow(static_cast<unsigned>(e));
            for (int i = 0; i < -e; ++i) den.push_back(p);
        }
        return RationalFunction::from_factors(num, den);
    }

private:
    Rational scalar_ = 1;
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, int> exponents_;
};

// (L+d)!/L! = prod_{j=1..d} (L+j); for d < 0 it is 1/prod_{j=0..|d|-1} (L-j).
void add_factorial_shift(LinearProduct& out, const LinearForm& arg, std::int64_t d, int exponent) {
    if (d > 0) {
        for (std::int64_t j = 1; j <= d; ++j) out.multiply({arg.a, arg.b, arg.c + j}, exponent);
    } else {
        for (std::int64_t j = 0; j < -d; ++j) out.multiply({arg.a, arg.b, arg.c - j}, -exponent);
    }
}

std::int64_t sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

// |base| = prod p^e; returns (sign of base, [(p, e)]).
std::pair<int, std::vector<std::pair<std::int64_t, std::int64_t>>> factor_base(std::int64_t base) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    const int sign = base < 0 ? -1 : 1;
    std::int64_t m = base < 0 ? -base : base;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        std::int64_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return {sign, out};
}

}  // namespace

Rational eval_term(const HypergeometricTerm& term, std::int64_t n, std::int64_t k) {
    const Rational denom = term.denom_poly.eval(Rational(static_cast<long>(n)), Rational(static_cast<long>(k)));
    if (denom == 0)
        throw DomainError("term denominator vanishes at (" + std::to_string(n) + "," + std::to_string(k) + ")");

    bool vanishes = false;
    Rational value = 1;
    for (const auto& f : term.binoms) {
        const Integer c = binomial(f.top.eval(n, k), f.bottom.eval(n, k));
        if (c == 0) {
            if (f.power < 0)
                throw DomainError("zero binomial with negative power at (" + std::to_string(n) + "," +
                                  std::to_string(k) + ")");
            vanishes = true;
            continue;
        }
        value *= rational_pow(c, f.power);
    }
    if (vanishes) return Rational(0);

    for (const auto& b : term.bases) value *= rational_pow(Integer(static_cast<long>(b.base)), b.exponent.eval(n, k));
    if (sign_power(term.sign_exponent.eval(n, k)) < 0) value = -value;
    value *= term.numer_poly.eval(Rational(static_cast<long>(n)), Rational(static_cast<long>(k)));
    return value / denom;
}

RationalFunction shift_quotient(const HypergeometricTerm& term, std::int64_t dn, std::int64_t dk) {
    LinearProduct product;
    for (const auto& atom : factorial_atoms(term)) {
        add_factorial_shift(product, atom.arg, atom.arg.a * dn + atom.arg.b * dk, atom.exponent);
    }
    for (const auto& b : term.bases) {
        product.scale(rational_pow(Integer(static_cast<long>(b.base)), b.exponent.a * dn + b.exponent.b * dk));
    }
    product.scale(Rational(static_cast<long>(sign_power(term.sign_exponent.a * dn + term.sign_exponent.b * dk))));

    RationalFunction out = product.to_rational_function();
    if (!term.numer_poly.is_constant()) out = out * RationalFunction(term.numer_poly.shifted(dn, dk), term.numer_poly);
    if (!term.denom_poly.is_constant()) out = out * RationalFunction(term.denom_poly, term.denom_poly.shifted(dn, dk));
    return out;
}

QuotientResult term_quotient(const HypergeometricTerm& t1, const HypergeometricTerm& t2) {
    // Factorial atoms grouped by slope (a, b); each group must have total
    // exponent zero, after which every atom reduces to a product of linear
    // factors relative to the group's smallest offset.
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<FactorialAtom>> groups;
    auto atoms = factorial_atoms(t1);
    for (auto& a : factorial_atoms(t2, -1)) atoms.push_back(a);
    for (const auto& a : atoms) groups[{a.arg.a, a.arg.b}].push_back(a);

    LinearProduct product;
    for (const auto& [slope, members] : groups) {
        if (slope.first == 0 && slope.second == 0) {
            for (const auto& m : members) {
                if (m.arg.c < 0) return NotProportional{"factorial of a negative constant"};
                product.scale(rational_pow(factorial(m.arg.c), m.exponent));
            }
            continue;
        }
        int total = 0;
        std::int64_t base_offset = members.front().arg.c;
        for (const auto& m : members) {
            total += m.exponent;
            base_offset = std::min(base_offset, m.arg.c);
        }
        if (total != 0) {
            return NotProportional{"unmatched factorials with slope (" + std::to_string(slope.first) + "," +
                                   std::to_string(slope.second) + ")"};
        }
        for (const auto& m : members) {
            add_factorial_shift(product, {slope.first, slope.second, base_offset}, m.arg.c - base_offset, m.exponent);
        }
    }

    // Bases are split into primes so that e.g. 4^(2k-6n) and 16^(k-3n+1)
    // compare on a common footing; negative bases feed the sign.
    LinearForm sign = t1.sign_exponent;
    sign.a -= t2.sign_exponent.a;
    sign.b -= t2.sign_exponent.b;
    sign.c -= t2.sign_exponent.c;
    std::map<std::int64_t, LinearForm> prime_exponents;
    auto add_bases = [&](const std::vector<BaseFactor>& bases, int direction) {
        for (const auto& b : bases) {
            const auto [s, primes] = factor_base(b.base);
            if (s < 0) {
                sign.a += direction * b.exponent.a;
                sign.b += direction * b.exponent.b;
                sign.c += direction * b.exponent.c;
            }
            for (const auto& [p, e] : primes) {
                auto& acc = prime_exponents[p];
                acc.a += direction * e * b.exponent.a;
                acc.b += direction * e * b.exponent.b;
                acc.c += direction * e * b.exponent.c;
            }
        }
    };
    add_bases(t1.bases, 1);
    add_bases(t2.bases, -1);
    for (const auto& [p, e] : prime_exponents) {
        if (e.a != 0 || e.b != 0) return NotProportional{"non-constant residual power of " + std::to_string(p)};
        product.scale(rational_pow(Integer(static_cast<long>(p)), e.c));
    }
    if (sign.a % 2 != 0 || sign.b % 2 != 0) return NotProportional{"non-constant residual sign"};
    product.scale(Rational(static_cast<long>(sign_power(sign.c))));

    if (t2.numer_poly.is_zero()) return NotProportional{"divisor term is identically zero"};
    RationalFunction out = product.to_rational_function();
    out = out * RationalFunction(t1.numer_poly * t2.denom_poly, t1.denom_poly * t2.numer_poly);
    return out;
}

}  // namespace wzaudit

#pragma once

// Bivariate polynomials in n, k over Q and rational functions built on them.
//
// Monomials are ordered lexicographically with n > k. A BivarPoly iterates
// its terms in decreasing order, so begin() is the leading term.
//
// RationalFunction keeps its denominator as a list of primitive factors.
// Every denominator this library produces is a product of linear forms, so
// keeping the factors lets sums use the factor-wise lcm and lets reduction
// proceed by trial division with each factor. Reaching lowest terms is not
// guaranteed; equality is decided by cross-multiplication.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wzaudit/exact.hpp"

namespace wzaudit {

struct Monomial {
    std::uint32_t n_exp = 0;
    std::uint32_t k_exp = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Decreasing lexicographic order with n > k.
struct LexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.n_exp != b.n_exp) return a.n_exp > b.n_exp;
        return a.k_exp > b.k_exp;
    }
};

class BivarPoly {
public:
    using TermMap = std::map<Monomial, Rational, LexDescending>;

    BivarPoly() = default;
    BivarPoly(const Rational& constant);  // NOLINT: implicit scalar promotion
    BivarPoly(long constant) : BivarPoly(Rational(constant)) {}  // NOLINT

    static BivarPoly n();
    static BivarPoly k();
    /// a*n + b*k + c
    static BivarPoly linear(std::int64_t a, std::int64_t b, std::int64_t c);
    static BivarPoly monomial(const Rational& coeff, std::uint32_t n_exp, std::uint32_t k_exp);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (coefficient of n^0 k^0).
    Rational constant_term() const;
    Rational coeff(std::uint32_t n_exp, std::uint32_t k_exp) const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;

    /// Requires a nonzero polynomial.
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& other);
    BivarPoly& operator-=(const BivarPoly& other);
    BivarPoly& operator*=(const BivarPoly& other);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

    BivarPoly pow(unsigned exponent) const;

    Rational eval(const Rational& n_value, const Rational& k_value) const;

    /// P(n + dn, k + dk).
    BivarPoly shifted(std::int64_t dn, std::int64_t dk) const;

    /// Exact quotient if `divisor` divides this polynomial in Q[n,k].
    std::optional<BivarPoly> divide_exact(const BivarPoly& divisor) const;

    /// Positive rational c such that this/c has coprime integer coefficients
    /// with a positive leading coefficient (sign folded into c). Zero for 0.
    Rational content() const;
    /// this / content(); the zero polynomial stays zero.
    BivarPoly primitive_part() const;

    /// Terms in decreasing lex order with explicit signs, e.g. "20*n^2-12*n*k+1".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

/// Lexicographic comparison of term lists; gives BivarPoly a deterministic
/// total order for sorting factor lists.
bool poly_less(const BivarPoly& a, const BivarPoly& b);

BivarPoly poly_add(const BivarPoly& a, const BivarPoly& b);
BivarPoly poly_mul(const BivarPoly& a, const BivarPoly& b);
Rational poly_eval(const BivarPoly& a, const Rational& n, const Rational& k);

class RationalFunction {
public:
    struct Factor {
        BivarPoly poly;  // primitive, positive leading coefficient, non-constant
        int multiplicity = 1;
    };

    RationalFunction() = default;  // zero
    RationalFunction(const BivarPoly& numerator);  // NOLINT: polynomials embed
    RationalFunction(const Rational& constant) : RationalFunction(BivarPoly(constant)) {}  // NOLINT
    /// Throws DomainError when the denominator is the zero polynomial.
    RationalFunction(const BivarPoly& numerator, const BivarPoly& denominator);

    /// numerator / prod(factors); factors need not be normalized.
    static RationalFunction from_factors(const BivarPoly& numerator,
                                         const std::vector<BivarPoly>& denominator_factors);

    const BivarPoly& numerator() const { return num_; }
    BivarPoly denominator() const;
    const std::vector<Factor>& denominator_factors() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// Throws DomainError when the denominator vanishes at the point.
    Rational eval(const Rational& n, const Rational& k) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws DomainError on division by the zero function.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    /// Re-runs reduction; a no-op on values produced by this class.
    RationalFunction canonicalized() const;

    std::string to_string() const;

private:
    void add_denominator_factor(const BivarPoly& factor, int multiplicity);
    void reduce();

    BivarPoly num_;
    std::vector<Factor> den_;
};

RationalFunction ratfun_sub(const RationalFunction& a, const RationalFunction& b);
bool ratfun_is_zero(const RationalFunction& a);
/// num(a)*den(b) == num(b)*den(a).
bool ratfun_eq(const RationalFunction& a, const RationalFunction& b);

}  // namespace wzaudit

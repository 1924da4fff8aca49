#pragma once

// Hypergeometric terms in (n, k): a sign (-1)^L, integer bases raised to
// linear forms, binomial factors with integer powers, and a polynomial
// prefactor/denominator. Terms come from a small line-oriented DSL:
//
//   # comment lines before `term` are kept as the document's provenance
//   term guillera1.G
//   sign (-1)^(n+k)
//   base 16^(-3*n+k+1)
//   factor binom(2*n,n)^3
//   factor binom(2*k,k)^-1
//   poly 2*n^3
//   denompoly 2*n+2*k-1
//   end
//
// Binomials keep the zero-convention when evaluated, so C(2n-2k, n-k)
// vanishes for k > n. shift_quotient and term_quotient instead expand each
// binomial into factorials and work formally; their identities are only
// meaningful where no factorial argument is negative.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wzaudit/exact.hpp"
#include "wzaudit/polyalg.hpp"

namespace wzaudit {

/// a*n + b*k + c
struct LinearForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t eval(std::int64_t n, std::int64_t k) const { return a * n + b * k + c; }
    BivarPoly to_poly() const { return BivarPoly::linear(a, b, c); }
    std::string to_string() const { return to_poly().to_string(); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct BaseFactor {
    std::int64_t base = 2;
    LinearForm exponent;

    friend bool operator==(const BaseFactor&, const BaseFactor&) = default;
};

struct BinomFactor {
    LinearForm top;
    LinearForm bottom;
    int power = 1;

    friend bool operator==(const BinomFactor&, const BinomFactor&) = default;
};

struct HypergeometricTerm {
    LinearForm sign_exponent;
    std::vector<BaseFactor> bases;
    std::vector<BinomFactor> binoms;
    BivarPoly numer_poly{1L};
    BivarPoly denom_poly{1L};

    friend bool operator==(const HypergeometricTerm&, const HypergeometricTerm&) = default;
};

struct TermDocument {
    std::string name;
    HypergeometricTerm term;
    std::string provenance;  // comment lines preceding `term`, newline-separated

    friend bool operator==(const TermDocument&, const TermDocument&) = default;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, semantic };

    ParseError(Kind kind, int line, int column, const std::string& message);

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    Kind kind_;
    int line_;
    int column_;
};

/// Polynomial with integer literals in n and k (+, -, *, ^, parentheses).
BivarPoly parse_polynomial(std::string_view text);

TermDocument parse_document(std::string_view text);
HypergeometricTerm parse_term(std::string_view text);

std::string serialize_document(const TermDocument& doc);
std::string serialize_term(const HypergeometricTerm& term, std::string_view name = "t");

/// Builtin DSL sources: guillera1.F, guillera1.G, guillera2.F, guillera2.G.
std::vector<std::string> builtin_term_names();
/// Throws std::out_of_range for an unknown name.
std::string_view builtin_term_source(std::string_view name);
TermDocument builtin_term(std::string_view name);

/// Exact value at integer (n, k). Throws DomainError if the polynomial
/// denominator vanishes or a zero binomial carries a negative power.
Rational eval_term(const HypergeometricTerm& term, std::int64_t n, std::int64_t k);

/// Q with term(n+dn, k+dk) = Q(n,k) * term(n,k), as a formal rational function.
RationalFunction shift_quotient(const HypergeometricTerm& term, std::int64_t dn, std::int64_t dk);

struct NotProportional {
    std::string reason;
};

using QuotientResult = std::variant<RationalFunction, NotProportional>;

/// t1/t2 as a rational function, when the factorial atoms and base powers
/// of the two terms cancel up to rational factors.
QuotientResult term_quotient(const HypergeometricTerm& t1, const HypergeometricTerm& t2);

}  // namespace wzaudit

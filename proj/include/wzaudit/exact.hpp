#pragma once

// Exact integer/rational arithmetic and the combinatorial primitives
// (factorials, binomials, p-adic valuations) every audit is built on.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wzaudit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation is asked for a value that does not exist
/// (valuation of zero, division by zero, non-positive floor divisor...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& x);
/// "a/b", or just "a" when the denominator is 1.
std::string to_string(const Rational& x);

bool is_integral(const Rational& x);

/// Integer power with a possibly negative exponent.
Rational rational_pow(const Integer& base, std::int64_t exponent);
Integer integer_pow(const Integer& base, std::uint64_t exponent);

/// n!, memoized for n up to factorial_cache_limit(). Thread-safe.
Integer factorial(std::int64_t n);

/// Largest argument kept in the factorial cache (default 10000).
std::int64_t factorial_cache_limit();
void set_factorial_cache_limit(std::int64_t limit);

/// C(a, b) with the zero-convention: 0 whenever b < 0, b > a, or a < 0.
Integer binomial(std::int64_t a, std::int64_t b);

/// v_p(n!) by Legendre's formula.
std::int64_t legendre_valuation(std::int64_t p, std::int64_t n);

/// Largest a with p^a | m. Throws DomainError for m == 0.
std::int64_t int_valuation(std::int64_t p, const Integer& m);

/// v_p(num) - v_p(den). Throws DomainError for x == 0.
std::int64_t rat_valuation(std::int64_t p, const Rational& x);

/// floor(a / b); throws DomainError unless b > 0.
Integer floor_div(const Integer& a, const Integer& b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Primes <= limit, increasing (sieve of Eratosthenes).
std::vector<std::int64_t> primes_upto(std::int64_t limit);

}  // namespace wzaudit

#include "wzaudit/exact.hpp"

#include <atomic>
#include <mutex>

namespace wzaudit {

namespace {

struct FactorialCache {
    std::mutex mutex;
    std::vector<Integer> values{Integer(1)};  // values[i] == i!
    std::atomic<std::int64_t> limit{10000};
};

FactorialCache& cache() {
    static FactorialCache instance;
    return instance;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer integer_pow(const Integer& base, std::uint64_t exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational rational_pow(const Integer& base, std::int64_t exponent) {
    if (exponent >= 0) return Rational(integer_pow(base, static_cast<std::uint64_t>(exponent)));
    if (base == 0) throw DomainError("zero raised to a negative power");
    return make_rational(Integer(1), integer_pow(base, static_cast<std::uint64_t>(-exponent)));
}

std::int64_t factorial_cache_limit() { return cache().limit.load(); }

void set_factorial_cache_limit(std::int64_t limit) { cache().limit.store(limit < 0 ? 0 : limit); }

Integer factorial(std::int64_t n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    auto& c = cache();
    if (n > c.limit.load()) {
        Integer out;
        mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
        return out;
    }
    std::lock_guard lock(c.mutex);
    while (static_cast<std::int64_t>(c.values.size()) <= n) {
        const auto i = static_cast<long>(c.values.size());
        c.values.push_back(c.values.back() * i);
    }
    return c.values[static_cast<std::size_t>(n)];
}

Integer binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || b > a) return Integer(0);
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

std::int64_t legendre_valuation(std::int64_t p, std::int64_t n) {
    std::int64_t total = 0;
    for (std::int64_t q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break;
    }
    return total;
}

std::int64_t int_valuation(std::int64_t p, const Integer& m) {
    if (m == 0) throw DomainError("valuation of zero is infinite");
    Integer rest;
    Integer prime(static_cast<long>(p));
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t()));
}

std::int64_t rat_valuation(std::int64_t p, const Rational& x) {
    if (x == 0) throw DomainError("valuation of zero is infinite");
    return int_valuation(p, x.get_num()) - int_valuation(p, x.get_den());
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b <= 0) throw DomainError("floor_div requires a positive divisor");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw DomainError("floor_div requires a positive divisor");
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

std::vector<std::int64_t> primes_upto(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

}  // namespace wzaudit

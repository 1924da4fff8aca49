#include "wzaudit/verify.hpp"

#include <stdexcept>

namespace wzaudit {

std::vector<SumSpec> builtin_sums() {
    return {
        {"sun_a", 0, 3, 1, 3, false, -8},
        {"sun_b", 0, 3, 1, 3, false, 16},
        {"sun_c", 0, 6, 1, 3, false, 256},
        {"sun_d", 0, 6, 1, 3, false, -512},
        {"sun_e", 0, 42, 5, 3, false, 4096},
        {"guillera1", 20, 8, 1, 5, false, -4096},
        {"guillera2", 120, 34, 3, 4, true, 65536},
    };
}

SumSpec builtin_sum(std::string_view name) {
    for (auto& s : builtin_sums()) {
        if (s.name == name) return s;
    }
    throw std::out_of_range("unknown sum: " + std::string(name));
}

Integer eval_sum(const SumSpec& spec, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("eval_sum requires n >= 1");
    const Integer base(static_cast<long>(spec.base));
    Integer total = 0;
    // Horner in the base: total = sum_k a_k base^(n-1-k).
    for (std::int64_t k = 0; k < n; ++k) {
        const Integer kk(static_cast<long>(k));
        Integer term = spec.c2 * kk * kk + spec.c1 * kk + spec.c0;
        term *= integer_pow(binomial(2 * k, k), spec.central_power);
        if (spec.include_quad_central) term *= binomial(4 * k, 2 * k);
        total = total * base + term;
    }
    return total;
}

std::int64_t divisor_valuation(DivisorKind kind, std::int64_t n, std::int64_t p) {
    const std::int64_t v_two = p == 2 ? 1 : 0;
    const std::int64_t v_n = int_valuation(p, Integer(static_cast<long>(n)));
    const std::int64_t v_central = legendre_valuation(p, 2 * n) - 2 * legendre_valuation(p, n);
    if (kind == DivisorKind::weak) return v_two + v_n + v_central;
    return v_two + 2 * v_n + 2 * v_central;
}

DivisibilityCheck check_divisibility(const SumSpec& spec, DivisorKind kind, std::int64_t n,
                                     bool valuation_cross_check) {
    if (n < 2) throw std::invalid_argument("check_divisibility requires n >= 2");
    DivisibilityCheck out;
    out.n = n;
    out.value = eval_sum(spec, n);
    out.divisor = divisor(kind, n);
    mpz_tdiv_qr(out.quotient.get_mpz_t(), out.remainder.get_mpz_t(), out.value.get_mpz_t(),
                out.divisor.get_mpz_t());
    out.divisible = out.remainder == 0;

    if (valuation_cross_check) {
        bool verdict = true;
        if (out.value != 0) {
            for (const auto p : primes_upto(2 * n)) {
                if (divisor_valuation(kind, n, p) > int_valuation(p, out.value)) {
                    verdict = false;
                    break;
                }
            }
        }
        out.valuation_agrees = verdict == out.divisible;
    }
    return out;
}

}  // namespace wzaudit

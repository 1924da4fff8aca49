#include <stdexcept>

#include "wzaudit/parallel.hpp"
#include "wzaudit/verify.hpp"

namespace wzaudit {

namespace {

PointQuotient divide_point(Integer dividend, Integer divisor) {
    PointQuotient out;
    out.dividend = std::move(dividend);
    out.divisor = std::move(divisor);
    mpz_tdiv_qr(out.quotient.get_mpz_t(), out.remainder.get_mpz_t(), out.dividend.get_mpz_t(),
                out.divisor.get_mpz_t());
    out.divisible = out.remainder == 0;
    return out;
}

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

std::string str(std::int64_t v) { return std::to_string(v); }

// {x/m} as an exact rational in [0, 1).
Rational frac(std::int64_t x, std::int64_t m) {
    return make_rational(big(x - floor_div(x, m) * m), big(m));
}

bool in_region(Lemma24Region region, std::int64_t m, std::int64_t n, std::int64_t k) {
    switch (region) {
        case Lemma24Region::all:
            return true;
        case Lemma24Region::k_zero:
            return k == 0;
        case Lemma24Region::case_3a: {
            const std::int64_t s = 2 * n + k - 1;
            return 2 * k >= m && 3 * m <= 2 * s && s < 2 * m;
        }
    }
    return false;
}

// Per-m partial result; merged in ascending m.
struct Partial {
    std::int64_t pass_count = 0;
    std::vector<Witness> failures;
};

LemmaAudit merge(std::string id, std::string range, const std::vector<Partial>& parts) {
    LemmaAudit audit{std::move(id), std::move(range), 0, {}};
    for (const auto& p : parts) {
        audit.pass_count += p.pass_count;
        audit.failures.insert(audit.failures.end(), p.failures.begin(), p.failures.end());
    }
    return audit;
}

void audit_margin_point(Partial& part, std::int64_t m, std::int64_t n, std::int64_t k) {
    const MarginRecord r = floor_margin(m, n, k);
    const Rational via_frac = fractional_margin(m, n, k);
    if (!r.violation && via_frac == r.margin) {
        ++part.pass_count;
        return;
    }
    Witness w;
    w.params = {{"m", str(m)}, {"n", str(n)}, {"k", str(k)}};
    w.values = {{"lhs", str(r.lhs)}, {"rhs", str(r.rhs)}, {"margin", str(r.margin)},
                {"fractional_margin", to_string(via_frac)}};
    part.failures.push_back(std::move(w));
}

}  // namespace

PointQuotient lemma22_point(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("lemma22_point requires n >= 1 and 0 <= k <= n");
    return divide_point(big(n) * binomial(2 * n, n) * binomial(2 * n + 2 * k, n + k) * binomial(n + k, 2 * k),
                        big(2 * n + 2 * k - 1) * binomial(2 * k, k));
}

Lemma23Result lemma23_point(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("lemma23_point requires n >= 2");
    Lemma23Result out;
    out.division = divide_point(big(n) * big(n) * big(n + 1) * binomial(2 * n, n) * binomial(2 * n - 2, n - 1) *
                                    binomial(2 * n + 2, n + 1),
                                big(64 * (2 * n + 1)));
    out.closed_form = big(2 * n - 1) * big(2 * n - 1) * integer_pow(binomial(2 * n - 3, n - 1), 3);
    out.identity_holds = out.division.divisible && out.division.quotient == out.closed_form;
    return out;
}

MarginRecord floor_margin(std::int64_t m, std::int64_t n, std::int64_t k) {
    if (m < 2) throw std::invalid_argument("floor_margin requires m >= 2");
    MarginRecord r{m, n, k};
    r.lhs = floor_div(4 * n + 2 * k - 2, m) + 3 * floor_div(k, m) + floor_div(2 * n, m);
    r.rhs = 3 * floor_div(2 * k, m) + floor_div(n, m) + floor_div(n - 1, m) + 2 * floor_div(n - k, m) +
            floor_div(2 * n + k - 1, m);
    r.margin = r.lhs - r.rhs;
    r.violation = r.margin < 0;
    return r;
}

Rational fractional_margin(std::int64_t m, std::int64_t n, std::int64_t k) {
    // The floor arguments cancel linearly, so LHS - RHS is this signed sum of
    // fractional parts.
    return 3 * frac(2 * k, m) + frac(n, m) + frac(n - 1, m) + 2 * frac(n - k, m) + frac(2 * n + k - 1, m) -
           frac(4 * n + 2 * k - 2, m) - 3 * frac(k, m) - frac(2 * n, m);
}

LemmaAudit lemma24_scan(const Lemma24Options& options) {
    if (options.m_max < 2) throw std::invalid_argument("lemma24_scan requires m_max >= 2");
    const auto m_count = static_cast<std::size_t>(options.m_max - 1);
    const auto parts = parallel_map<Partial>(m_count, options.jobs, [&](std::size_t i) {
        const auto m = static_cast<std::int64_t>(i) + 2;
        Partial part;
        for (std::int64_t n = 0; n <= m; ++n) {
            for (std::int64_t k = 0; k <= n; ++k) {
                if (in_region(options.region, m, n, k)) audit_margin_point(part, m, n, k);
            }
        }
        for (std::int64_t n = m + 1; n <= options.full_range_max; ++n) {
            for (std::int64_t k = 0; k <= n; ++k) {
                if (in_region(options.region, m, n, k)) audit_margin_point(part, m, n, k);
            }
        }
        return part;
    });
    std::string range = "2<=m<=" + str(options.m_max) + ", residues 0<=k<=n<=m";
    if (options.full_range_max > 0) range += ", direct 0<=k<=n<=" + str(options.full_range_max);
    if (options.region == Lemma24Region::k_zero) range += ", k=0";
    if (options.region == Lemma24Region::case_3a) range += ", case 3a";
    return merge("2.4", range, parts);
}

Rational lemma25_W(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("lemma25_W requires n >= 1 and 0 <= k <= n");
    const Integer num = integer_pow(factorial(k), 3) * factorial(2 * n) * factorial(2 * k + 4 * n - 2);
    const Integer den = integer_pow(factorial(2 * k), 3) * factorial(n) * factorial(n - 1) *
                        integer_pow(factorial(n - k), 2) * factorial(k + 2 * n - 1);
    return make_rational(num, den);
}

Rational lemma25_W_binomial(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("lemma25_W_binomial requires n >= 1 and 0 <= k <= n");
    const Integer num = binomial(2 * n, n) * binomial(n, k) * binomial(k + n, 2 * k) *
                        binomial(k + 2 * n - 1, n - 1) * binomial(2 * k + 4 * n - 2, k + 2 * n - 1);
    return make_rational(num, integer_pow(binomial(2 * k, k), 2));
}

std::int64_t lemma25_valuation_sum(std::int64_t p, std::int64_t n, std::int64_t k) {
    const std::int64_t top = 4 * n + 2 * k - 2;
    std::int64_t total = 0;
    for (std::int64_t q = p; q <= top; q *= p) {
        total += floor_margin(q, n, k).margin;
        if (q > top / p) break;
    }
    return total;
}

LemmaAudit lemma25_scan(std::int64_t n_max, unsigned jobs) {
    if (n_max < 1) throw std::invalid_argument("lemma25_scan requires n_max >= 1");
    const auto primes = primes_upto(6 * n_max);
    const auto parts = parallel_map<Partial>(static_cast<std::size_t>(n_max), jobs, [&](std::size_t i) {
        const auto n = static_cast<std::int64_t>(i) + 1;
        Partial part;
        for (std::int64_t k = 0; k <= n; ++k) {
            const Rational w = lemma25_W(n, k);
            const Rational w_binom = lemma25_W_binomial(n, k);
            Witness w_fail;
            w_fail.params = {{"n", str(n)}, {"k", str(k)}};
            if (!is_integral(w) || w != w_binom) {
                w_fail.values = {{"W", to_string(w)}, {"W_binomial", to_string(w_binom)}};
                part.failures.push_back(std::move(w_fail));
                continue;
            }
            bool ok = true;
            for (const auto p : primes) {
                if (p > 4 * n + 2 * k - 2) break;
                const std::int64_t floors = lemma25_valuation_sum(p, n, k);
                const std::int64_t v = rat_valuation(p, w);
                if (floors != v || floors < 0) {
                    w_fail.params.emplace_back("p", str(p));
                    w_fail.values = {{"W", to_string(w)}, {"floor_sum", str(floors)}, {"valuation", str(v)}};
                    part.failures.push_back(std::move(w_fail));
                    ok = false;
                    break;
                }
            }
            if (ok) ++part.pass_count;
        }
        return part;
    });
    return merge("2.5", "1<=n<=" + str(n_max) + ", 0<=k<=n", parts);
}

PointQuotient lemma26_point(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("lemma26_point requires n >= 1");
    return divide_point(factorial(6 * n - 5) * factorial(n - 1),
                        factorial(2 * n - 1) * factorial(2 * n - 2) * factorial(3 * n - 3));
}

std::int64_t lemma26_margin(std::int64_t m, std::int64_t n) {
    return floor_div(6 * n - 5, m) + floor_div(n - 1, m) - floor_div(2 * n - 1, m) - floor_div(2 * n - 2, m) -
           floor_div(3 * n - 3, m);
}

LemmaAudit lemma26_ineq_scan(std::int64_t m_max, unsigned jobs) {
    if (m_max < 2) throw std::invalid_argument("lemma26_ineq_scan requires m_max >= 2");
    const auto parts = parallel_map<Partial>(static_cast<std::size_t>(m_max - 1), jobs, [&](std::size_t i) {
        const auto m = static_cast<std::int64_t>(i) + 2;
        Partial part;
        for (std::int64_t n = 1; n <= m; ++n) {
            const std::int64_t margin = lemma26_margin(m, n);
            if (margin >= 0) {
                ++part.pass_count;
                continue;
            }
            part.failures.push_back({{{"m", str(m)}, {"n", str(n)}}, {{"margin", str(margin)}}});
        }
        return part;
    });
    return merge("2.6", "2<=m<=" + str(m_max) + ", 1<=n<=m", parts);
}

LemmaAudit lemma22_scan(std::int64_t n_max, unsigned jobs) {
    if (n_max < 1) throw std::invalid_argument("lemma22_scan requires n_max >= 1");
    const auto parts = parallel_map<Partial>(static_cast<std::size_t>(n_max), jobs, [&](std::size_t i) {
        const auto n = static_cast<std::int64_t>(i) + 1;
        Partial part;
        for (std::int64_t k = 1; k <= n; ++k) {
            const PointQuotient q = lemma22_point(n, k);
            if (q.divisible) {
                ++part.pass_count;
                continue;
            }
            part.failures.push_back({{{"n", str(n)}, {"k", str(k)}},
                                     {{"dividend", to_string(q.dividend)},
                                      {"divisor", to_string(q.divisor)},
                                      {"remainder", to_string(q.remainder)}}});
        }
        return part;
    });
    return merge("2.2", "1<=k<=n<=" + str(n_max), parts);
}

LemmaAudit lemma23_scan(std::int64_t n_max, unsigned jobs) {
    if (n_max < 2) throw std::invalid_argument("lemma23_scan requires n_max >= 2");
    const auto parts = parallel_map<Partial>(static_cast<std::size_t>(n_max - 1), jobs, [&](std::size_t i) {
        const auto n = static_cast<std::int64_t>(i) + 2;
        Partial part;
        const Lemma23Result r = lemma23_point(n);
        if (r.identity_holds) {
            ++part.pass_count;
        } else {
            part.failures.push_back({{{"n", str(n)}},
                                     {{"quotient", to_string(r.division.quotient)},
                                      {"remainder", to_string(r.division.remainder)},
                                      {"closed_form", to_string(r.closed_form)}}});
        }
        return part;
    });
    return merge("2.3", "2<=n<=" + str(n_max), parts);
}

LemmaAudit lemma26_point_scan(std::int64_t n_max, unsigned jobs) {
    if (n_max < 1) throw std::invalid_argument("lemma26_point_scan requires n_max >= 1");
    const auto parts = parallel_map<Partial>(static_cast<std::size_t>(n_max), jobs, [&](std::size_t i) {
        const auto n = static_cast<std::int64_t>(i) + 1;
        Partial part;
        const PointQuotient q = lemma26_point(n);
        if (q.divisible) {
            ++part.pass_count;
        } else {
            part.failures.push_back({{{"n", str(n)}},
                                     {{"dividend", to_string(q.dividend)},
                                      {"divisor", to_string(q.divisor)},
                                      {"remainder", to_string(q.remainder)}}});
        }
        return part;
    });
    return merge("2.6", "1<=n<=" + str(n_max), parts);
}

}  // namespace wzaudit

#include "wzaudit/wz.hpp"

#include <stdexcept>

#include "wzaudit/parallel.hpp"

namespace wzaudit {

Integer divisor(DivisorKind kind, std::int64_t n) {
    const Integer nn(static_cast<long>(n));
    const Integer central = binomial(2 * n, n);
    if (kind == DivisorKind::weak) return 2 * nn * central;
    return 2 * nn * nn * central * central;
}

std::string to_string(DivisorKind kind) { return kind == DivisorKind::weak ? "weak" : "strong"; }

DivisorKind parse_divisor_kind(std::string_view text) {
    if (text == "weak") return DivisorKind::weak;
    if (text == "strong") return DivisorKind::strong;
    throw std::invalid_argument("divisor kind must be 'weak' or 'strong'");
}

WZPairSpec builtin_pair(std::string_view name) {
    WZPairSpec pair;
    pair.name = std::string(name);
    if (name == "guillera1") {
        pair.scale_base = -4096;
    } else if (name == "guillera2") {
        pair.scale_base = 65536;
    } else {
        throw std::out_of_range("unknown builtin pair: " + std::string(name));
    }
    pair.F = builtin_term(pair.name + ".F").term;
    pair.G = builtin_term(pair.name + ".G").term;
    pair.divisor_kind = DivisorKind::strong;
    pair.sum_id = pair.name;
    return pair;
}

std::vector<std::string> builtin_pair_names() { return {"guillera1", "guillera2"}; }

std::pair<Rational, Rational> wz_relation_sides(const WZPairSpec& pair, std::int64_t n, std::int64_t k) {
    return {eval_term(pair.F, n, k - 1) - eval_term(pair.F, n, k),
            eval_term(pair.G, n + 1, k) - eval_term(pair.G, n, k)};
}

GridReport wz_grid_check(const WZPairSpec& pair, std::int64_t n_max, unsigned jobs) {
    if (n_max < 1) throw std::invalid_argument("wz_grid_check requires n_max >= 1");

    struct RowResult {
        std::int64_t checked = 0;
        std::int64_t skipped = 0;
        std::vector<GridViolation> violations;
    };
    const auto rows = parallel_map<RowResult>(static_cast<std::size_t>(n_max), jobs, [&](std::size_t i) {
        const auto n = static_cast<std::int64_t>(i) + 1;
        RowResult row;
        for (std::int64_t k = 1; k <= n; ++k) {
            try {
                auto [lhs, rhs] = wz_relation_sides(pair, n, k);
                ++row.checked;
                if (lhs != rhs) row.violations.push_back({n, k, lhs, rhs, {}});
            } catch (const DomainError&) {
                ++row.skipped;
            }
        }
        return row;
    });

    GridReport report;
    report.n_max = n_max;
    for (const auto& row : rows) {
        report.checked += row.checked;
        report.skipped += row.skipped;
        report.violations.insert(report.violations.end(), row.violations.begin(), row.violations.end());
    }
    return report;
}

RationalFunction wz_certificate(const WZPairSpec& pair) {
    auto q = term_quotient(pair.F, pair.G);
    if (auto* np = std::get_if<NotProportional>(&q)) throw DomainError("F and G are not proportional: " + np->reason);
    return std::get<RationalFunction>(q);
}

SymbolicResult wz_symbolic_check(const WZPairSpec& pair) {
    SymbolicResult result;
    auto q = term_quotient(pair.F, pair.G);
    if (auto* np = std::get_if<NotProportional>(&q)) {
        result.failure = "F and G are not proportional: " + np->reason;
        return result;
    }
    const RationalFunction& cert = std::get<RationalFunction>(q);
    // F(n,k-1) = S_F(0,-1) C G, F(n,k) = C G, G(n+1,k) = S_G(1,0) G.
    const RationalFunction f_prev = shift_quotient(pair.F, 0, -1) * cert;
    const RationalFunction g_next = shift_quotient(pair.G, 1, 0);
    result.residual = f_prev - cert - g_next + RationalFunction(Rational(1));
    result.holds = ratfun_is_zero(result.residual);
    return result;
}

DivisibilityOutcome divide_check(const Rational& value, const Integer& divisor) {
    DivisibilityOutcome out;
    out.value = value;
    if (!is_integral(value)) {
        out.integral = false;
        return out;
    }
    mpz_tdiv_qr(out.quotient.get_mpz_t(), out.remainder.get_mpz_t(), value.get_num().get_mpz_t(),
                divisor.get_mpz_t());
    out.divisible = out.remainder == 0;
    return out;
}

bool TelescopeAudit::per_term_passed() const {
    for (const auto& t : per_term) {
        if (!t.outcome.divisible) return false;
    }
    return true;
}

bool TelescopeAudit::passed() const {
    return per_term_passed() && g_sum.divisible && corner.divisible && conclusion.divisible && telescoping_identity;
}

TelescopeAudit telescope_audit(const WZPairSpec& pair, std::int64_t N, std::int64_t exponent_offset) {
    if (N < 2) throw std::invalid_argument("telescope_audit requires N >= 2");
    TelescopeAudit audit;
    audit.N = N;
    audit.scale_exponent = N + exponent_offset;
    audit.divisor = divisor(pair.divisor_kind, N);
    const Rational scale = rational_pow(pair.scale_base, audit.scale_exponent);

    Rational g_total = 0;
    for (std::int64_t k = 1; k <= N - 1; ++k) {
        const Rational s = scale * eval_term(pair.G, N, k);
        g_total += s;
        audit.per_term.push_back({k, divide_check(s, audit.divisor)});
    }
    audit.g_sum = divide_check(g_total, audit.divisor);

    const Rational corner = scale * eval_term(pair.F, N - 1, N - 1);
    audit.corner = divide_check(corner, audit.divisor);

    Rational f_total = 0;
    for (std::int64_t n = 0; n <= N - 1; ++n) f_total += eval_term(pair.F, n, 0);
    const Rational conclusion = scale * f_total;
    audit.conclusion = divide_check(conclusion, audit.divisor);
    audit.telescoping_identity = conclusion == g_total + corner;
    return audit;
}

}  // namespace wzaudit

#include <algorithm>
#include <array>
#include <stdexcept>

#include "wzaudit/verify.hpp"

// Each identity compares a value obtained from the builtin terms (left side)
// with an independent closed form built from binomials and factorials only
// (right side).

namespace wzaudit {

namespace {

constexpr std::array kIds{"g1_col1", "g1_gen", "f1_corner", "catalan_split", "g2_gen", "f2_corner", "telescoped_sum"};

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

Rational pow2(std::int64_t e) { return rational_pow(Integer(2), e); }

Integer sign_of(std::int64_t e) { return e % 2 == 0 ? Integer(1) : Integer(-1); }

const WZPairSpec& pair1() {
    static const WZPairSpec pair = builtin_pair("guillera1");
    return pair;
}

const WZPairSpec& pair2() {
    static const WZPairSpec pair = builtin_pair("guillera2");
    return pair;
}

// B^(N-1) * value / (2 N^2 C(2N,N)^2)
Rational scaled(const WZPairSpec& pair, std::int64_t N, const Rational& value) {
    return rational_pow(pair.scale_base, N - 1) * value / Rational(divisor(DivisorKind::strong, N));
}

RatioIdentity make(Rational lhs, Rational rhs) {
    RatioIdentity out{std::move(lhs), std::move(rhs), false};
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace

std::vector<std::string> ratio_identity_ids() { return {kIds.begin(), kIds.end()}; }

std::optional<std::pair<std::int64_t, std::int64_t>> ratio_identity_k_range(std::string_view id, std::int64_t N) {
    if (id == "g1_gen") return std::pair<std::int64_t, std::int64_t>{2, N};
    if (id == "g2_gen") return std::pair<std::int64_t, std::int64_t>{0, N};
    return std::nullopt;
}

RatioIdentity ratio_identity(std::string_view id, std::int64_t N, std::optional<std::int64_t> k,
                             std::string_view pair) {
    if (std::find(kIds.begin(), kIds.end(), id) == kIds.end())
        throw std::invalid_argument("unknown ratio identity: " + std::string(id));
    if (N < 2) throw std::invalid_argument("ratio identities require N >= 2");
    if (const auto range = ratio_identity_k_range(id, N)) {
        if (!k) throw std::invalid_argument(std::string(id) + " requires k");
        if (*k < range->first || *k > range->second)
            throw std::invalid_argument(std::string(id) + ": k out of range [" + std::to_string(range->first) + "," +
                                        std::to_string(range->second) + "]");
    }
    const Integer central = binomial(2 * N, N);

    if (id == "g1_col1") {
        const Rational lhs = scaled(pair1(), N, eval_term(pair1().G, N, 1));
        const Rational rhs = make_rational(big(N) * big(N) * big(N + 1) * central * binomial(2 * N - 2, N - 1) *
                                               binomial(2 * N + 2, N + 1),
                                           big(64 * (2 * N + 1)));
        return make(lhs, rhs);
    }
    if (id == "g1_gen") {
        const std::int64_t kk = *k;
        const Rational lhs = scaled(pair1(), N, eval_term(pair1().G, N, kk));
        const Rational rhs = pow2(4 * kk - 8) *
                             make_rational(big(N) * central * sign_of(kk + 1) * binomial(kk + N, N - kk) *
                                               binomial(2 * N - 2 * kk, N - kk) * binomial(2 * kk + 2 * N, kk + N),
                                           binomial(2 * kk, kk) * big(2 * kk + 2 * N - 1));
        return make(lhs, rhs);
    }
    if (id == "f1_corner") {
        const Rational lhs = scaled(pair1(), N, eval_term(pair1().F, N - 1, N - 1));
        const Integer c4 = binomial(4 * N - 4, 2 * N - 2);
        const Rational middle =
            pow2(4 * N - 5) * make_rational(sign_of(N + 1) * big(8 * N * N - 10 * N + 3) *
                                                integer_pow(binomial(2 * N - 2, N - 1), 2) * c4,
                                            big(N) * big(N) * central * central);
        const Rational rhs = pow2(4 * N - 7) * make_rational(sign_of(N + 1) * big(4 * N - 3) * c4, big(2 * N - 1));
        RatioIdentity out = make(lhs, rhs);
        out.equal = out.equal && middle == rhs;
        return out;
    }
    if (id == "catalan_split") {
        const Rational lhs = make_rational(binomial(4 * N - 4, 2 * N - 2), big(2 * N - 1));
        const Rational rhs(binomial(4 * N - 4, 2 * N - 2) - binomial(4 * N - 4, 2 * N - 3));
        return make(lhs, rhs);
    }
    if (id == "g2_gen") {
        const std::int64_t kk = *k;
        const Rational lhs = scaled(pair2(), N, eval_term(pair2().G, N, kk));
        const Rational rhs =
            pow2(4 * kk - 7) * make_rational(central * binomial(N, kk) * binomial(kk + N, N - kk) *
                                                 binomial(kk + 2 * N - 1, N - 1) *
                                                 binomial(2 * kk + 4 * N - 2, kk + 2 * N - 1),
                                             integer_pow(binomial(2 * kk, kk), 2));
        return make(lhs, rhs);
    }
    if (id == "f2_corner") {
        const Rational lhs = scaled(pair2(), N, eval_term(pair2().F, N - 1, N - 1));
        const Rational middle =
            3 * pow2(4 * N - 5) *
            make_rational(big(12 * N * N - 16 * N + 5) * binomial(2 * N - 2, N - 1) * binomial(3 * N - 3, N - 1) *
                              binomial(6 * N - 6, 3 * N - 3),
                          big(N) * big(N) * central * central);
        const Rational rhs = 3 * pow2(4 * N - 7) *
                             make_rational(factorial(6 * N - 5) * factorial(N - 1),
                                           factorial(2 * N - 1) * factorial(2 * N - 2) * factorial(3 * N - 3));
        RatioIdentity out = make(lhs, rhs);
        out.equal = out.equal && middle == rhs;
        return out;
    }
    // telescoped_sum
    if (pair != "guillera1" && pair != "guillera2") throw std::invalid_argument("unknown pair: " + std::string(pair));
    const WZPairSpec& p = pair == "guillera1" ? pair1() : pair2();
    Rational total = 0;
    for (std::int64_t n = 0; n <= N - 1; ++n) total += eval_term(p.F, n, 0);
    return make(rational_pow(p.scale_base, N - 1) * total, Rational(eval_sum(builtin_sum(p.sum_id), N)));
}

}  // namespace wzaudit

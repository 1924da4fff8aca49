#include <algorithm>

#include "wzaudit/polyalg.hpp"

namespace wzaudit {

BivarPoly::BivarPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BivarPoly BivarPoly::n() { return monomial(Rational(1), 1, 0); }
BivarPoly BivarPoly::k() { return monomial(Rational(1), 0, 1); }

BivarPoly BivarPoly::linear(std::int64_t a, std::int64_t b, std::int64_t c) {
    BivarPoly p;
    p.add_term({1, 0}, Rational(static_cast<long>(a)));
    p.add_term({0, 1}, Rational(static_cast<long>(b)));
    p.add_term({0, 0}, Rational(static_cast<long>(c)));
    return p;
}

BivarPoly BivarPoly::monomial(const Rational& coeff, std::uint32_t n_exp, std::uint32_t k_exp) {
    BivarPoly p;
    p.add_term({n_exp, k_exp}, coeff);
    return p;
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool BivarPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational BivarPoly::constant_term() const { return coeff(0, 0); }

Rational BivarPoly::coeff(std::uint32_t n_exp, std::uint32_t k_exp) const {
    auto it = terms_.find(Monomial{n_exp, k_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BivarPoly::total_degree() const {
    int degree = -1;
    for (const auto& [m, c] : terms_) degree = std::max(degree, static_cast<int>(m.n_exp + m.k_exp));
    return degree;
}

const Monomial& BivarPoly::leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& BivarPoly::leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term({ma.n_exp + mb.n_exp, ma.k_exp + mb.k_exp}, ca * cb);
        }
    }
    return out;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& other) {
    *this = *this * other;
    return *this;
}

BivarPoly BivarPoly::pow(unsigned exponent) const {
    BivarPoly result(1L);
    BivarPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Rational BivarPoly::eval(const Rational& n_value, const Rational& k_value) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::uint32_t i = 0; i < m.n_exp; ++i) term *= n_value;
        for (std::uint32_t j = 0; j < m.k_exp; ++j) term *= k_value;
        total += term;
    }
    return total;
}

BivarPoly BivarPoly::shifted(std::int64_t dn, std::int64_t dk) const {
    if (dn == 0 && dk == 0) return *this;
    const BivarPoly n_sub = linear(1, 0, dn);
    const BivarPoly k_sub = linear(0, 1, dk);
    std::vector<BivarPoly> n_pows{BivarPoly(1L)};
    std::vector<BivarPoly> k_pows{BivarPoly(1L)};
    BivarPoly out;
    for (const auto& [m, c] : terms_) {
        while (n_pows.size() <= m.n_exp) n_pows.push_back(n_pows.back() * n_sub);
        while (k_pows.size() <= m.k_exp) k_pows.push_back(k_pows.back() * k_sub);
        out += BivarPoly(c) * n_pows[m.n_exp] * k_pows[m.k_exp];
    }
    return out;
}

std::optional<BivarPoly> BivarPoly::divide_exact(const BivarPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    const Monomial& lead = divisor.leading_monomial();
    const Rational& lead_coeff = divisor.leading_coeff();
    BivarPoly remainder = *this;
    BivarPoly quotient;
    while (!remainder.is_zero()) {
        const Monomial rm = remainder.leading_monomial();
        if (rm.n_exp < lead.n_exp || rm.k_exp < lead.k_exp) return std::nullopt;
        const BivarPoly step = monomial(remainder.leading_coeff() / lead_coeff, rm.n_exp - lead.n_exp,
                                        rm.k_exp - lead.k_exp);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

Rational BivarPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational out = make_rational(num_gcd, den_lcm);
    return leading_coeff() < 0 ? Rational(-out) : out;
}

BivarPoly BivarPoly::primitive_part() const {
    if (terms_.empty()) return {};
    const Rational c = content();
    BivarPoly out = *this;
    for (auto& [m, coeff] : out.terms_) coeff /= c;
    return out;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (negative) out += "-";
        else if (!first) out += "+";
        first = false;

        std::string vars;
        auto append_var = [&vars](const char* name, std::uint32_t e) {
            if (e == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (e > 1) vars += "^" + std::to_string(e);
        };
        append_var("n", m.n_exp);
        append_var("k", m.k_exp);

        if (vars.empty()) {
            out += wzaudit::to_string(magnitude);
        } else if (magnitude == 1) {
            out += vars;
        } else {
            out += wzaudit::to_string(magnitude) + "*" + vars;
        }
    }
    return out;
}

bool poly_less(const BivarPoly& a, const BivarPoly& b) {
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const LexDescending order;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (order(ia->first, ib->first)) return true;
        if (order(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

BivarPoly poly_add(const BivarPoly& a, const BivarPoly& b) { return a + b; }
BivarPoly poly_mul(const BivarPoly& a, const BivarPoly& b) { return a * b; }
Rational poly_eval(const BivarPoly& a, const Rational& n, const Rational& k) { return a.eval(n, k); }

}  // namespace wzaudit

#include <algorithm>

#include "wzaudit/polyalg.hpp"

namespace wzaudit {

namespace {

BivarPoly expand(const std::vector<RationalFunction::Factor>& factors) {
    BivarPoly out(1L);
    for (const auto& f : factors) out *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
    return out;
}

int multiplicity_of(const std::vector<RationalFunction::Factor>& factors, const BivarPoly& poly) {
    for (const auto& f : factors) {
        if (f.poly == poly) return f.multiplicity;
    }
    return 0;
}

}  // namespace

RationalFunction::RationalFunction(const BivarPoly& numerator) : num_(numerator) {}

RationalFunction::RationalFunction(const BivarPoly& numerator, const BivarPoly& denominator)
    : num_(numerator) {
    if (denominator.is_zero()) throw DomainError("rational function with zero denominator");
    add_denominator_factor(denominator, 1);
    reduce();
}

RationalFunction RationalFunction::from_factors(const BivarPoly& numerator,
                                                const std::vector<BivarPoly>& denominator_factors) {
    RationalFunction out(numerator);
    for (const auto& f : denominator_factors) {
        if (f.is_zero()) throw DomainError("rational function with zero denominator");
        out.add_denominator_factor(f, 1);
    }
    out.reduce();
    return out;
}

// Folds the content of `factor` into the numerator, splits off pure powers of
// n and k, and merges what remains with an equal stored factor.
void RationalFunction::add_denominator_factor(const BivarPoly& factor, int multiplicity) {
    const Rational c = factor.content();
    Rational scale = 1;
    for (int i = 0; i < multiplicity; ++i) scale /= c;
    num_ *= BivarPoly(scale);
    BivarPoly prim = factor.primitive_part();
    if (prim.is_constant()) return;

    std::uint32_t min_n = UINT32_MAX;
    std::uint32_t min_k = UINT32_MAX;
    for (const auto& [m, coeff] : prim.terms()) {
        min_n = std::min(min_n, m.n_exp);
        min_k = std::min(min_k, m.k_exp);
    }
    auto merge = [this](const BivarPoly& p, int mult) {
        for (auto& f : den_) {
            if (f.poly == p) {
                f.multiplicity += mult;
                return;
            }
        }
        den_.push_back({p, mult});
    };
    if (min_n > 0 || min_k > 0) {
        if (min_n > 0) merge(BivarPoly::n(), static_cast<int>(min_n) * multiplicity);
        if (min_k > 0) merge(BivarPoly::k(), static_cast<int>(min_k) * multiplicity);
        prim = *prim.divide_exact(BivarPoly::monomial(Rational(1), min_n, min_k));
        if (prim.is_constant()) return;
    }
    merge(prim, multiplicity);
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& f : den_) {
        while (f.multiplicity > 0) {
            auto q = num_.divide_exact(f.poly);
            if (!q) break;
            num_ = std::move(*q);
            --f.multiplicity;
        }
    }
    std::erase_if(den_, [](const Factor& f) { return f.multiplicity <= 0; });
    std::sort(den_.begin(), den_.end(),
              [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
}

BivarPoly RationalFunction::denominator() const { return expand(den_); }

Rational RationalFunction::eval(const Rational& n, const Rational& k) const {
    Rational den = 1;
    for (const auto& f : den_) {
        const Rational v = f.poly.eval(n, k);
        if (v == 0) throw DomainError("rational function denominator vanishes at (" + wzaudit::to_string(n) + "," +
                                      wzaudit::to_string(k) + ")");
        for (int i = 0; i < f.multiplicity; ++i) den *= v;
    }
    return num_.eval(n, k) / den;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<RationalFunction::Factor> lcm = a.den_;
    for (const auto& f : b.den_) {
        bool found = false;
        for (auto& g : lcm) {
            if (g.poly == f.poly) {
                g.multiplicity = std::max(g.multiplicity, f.multiplicity);
                found = true;
            }
        }
        if (!found) lcm.push_back(f);
    }
    auto cofactor = [&lcm](const std::vector<RationalFunction::Factor>& own) {
        BivarPoly out(1L);
        for (const auto& g : lcm) {
            const int missing = g.multiplicity - multiplicity_of(own, g.poly);
            if (missing > 0) out *= g.poly.pow(static_cast<unsigned>(missing));
        }
        return out;
    };
    RationalFunction out;
    out.num_ = a.num_ * cofactor(a.den_) + b.num_ * cofactor(b.den_);
    out.den_ = std::move(lcm);
    out.reduce();
    return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction out;
    out.num_ = a.num_ * b.num_;
    if (out.num_.is_zero()) return out;
    out.den_ = a.den_;
    for (const auto& f : b.den_) out.add_denominator_factor(f.poly, f.multiplicity);
    out.reduce();
    return out;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    RationalFunction out;
    out.num_ = a.num_ * expand(b.den_);
    out.den_ = a.den_;
    out.add_denominator_factor(b.num_, 1);
    out.reduce();
    return out;
}

RationalFunction RationalFunction::canonicalized() const {
    RationalFunction out(num_);
    for (const auto& f : den_) out.add_denominator_factor(f.poly, f.multiplicity);
    out.reduce();
    return out;
}

std::string RationalFunction::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string den;
    for (const auto& f : den_) {
        if (!den.empty()) den += "*";
        den += "(" + f.poly.to_string() + ")";
        if (f.multiplicity > 1) den += "^" + std::to_string(f.multiplicity);
    }
    return "(" + num_.to_string() + ")/(" + den + ")";
}

RationalFunction ratfun_sub(const RationalFunction& a, const RationalFunction& b) { return a - b; }

bool ratfun_is_zero(const RationalFunction& a) { return a.is_zero(); }

bool ratfun_eq(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

}  // namespace wzaudit

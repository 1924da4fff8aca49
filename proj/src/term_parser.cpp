#include <cctype>
#include <optional>
#include <sstream>

#include "wzaudit/hyperterm.hpp"

namespace wzaudit {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error((kind == Kind::syntax ? "syntax error" : "semantic error") + std::string(" at line ") +
                         std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

using Kind = ParseError::Kind;

// Cursor over one line. Columns are 1-based; `offset` is the column of
// text[0] in the original line.
class LineCursor {
public:
    LineCursor(std::string_view text, int line, int offset) : text_(text), line_(line), offset_(offset) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t after = pos_ + word.size();
        if (after < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
            return false;
        pos_ = after;
        return true;
    }
    std::int64_t integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        const auto digits = text_.substr(start, pos_ - start);
        if (digits.size() > 18) fail("integer literal too large");
        return std::stoll(std::string(digits));
    }
    std::int64_t signed_integer() {
        const bool negative = accept('-');
        if (!negative) accept('+');
        const std::int64_t v = integer();
        return negative ? -v : v;
    }
    int column() const { return offset_ + static_cast<int>(pos_); }
    [[noreturn]] void fail(const std::string& message, Kind kind = Kind::syntax) const {
        fail_at(column(), message, kind);
    }
    [[noreturn]] void fail_at(int column, const std::string& message, Kind kind) const {
        throw ParseError(kind, line_, column, message);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int offset_;
};

// expr := term (('+'|'-') term)*
// term := unary ('*' unary | '/' integer)*
// unary := ('+'|'-') unary | power
// power := primary ('^' integer)?
// primary := integer | 'n' | 'k' | '(' expr ')'
class PolyParser {
public:
    explicit PolyParser(LineCursor& cur) : cur_(cur) {}

    BivarPoly expr() {
        BivarPoly out = term();
        for (;;) {
            if (cur_.accept('+')) out += term();
            else if (cur_.accept('-')) out -= term();
            else return out;
        }
    }

private:
    BivarPoly term() {
        BivarPoly out = unary();
        for (;;) {
            if (cur_.accept('*')) {
                out *= unary();
            } else if (cur_.accept('/')) {
                const int column = cur_.column();
                const std::int64_t d = cur_.integer();
                if (d == 0) cur_.fail_at(column, "division by zero", Kind::semantic);
                out *= BivarPoly(make_rational(1, static_cast<long>(d)));
            } else {
                return out;
            }
        }
    }
    BivarPoly unary() {
        if (cur_.accept('-')) return -unary();
        if (cur_.accept('+')) return unary();
        return power();
    }
    BivarPoly power() {
        BivarPoly base = primary();
        if (!cur_.accept('^')) return base;
        const bool paren = cur_.accept('(');
        const std::int64_t e = cur_.integer();
        if (paren) cur_.expect(')');
        if (e > 64) cur_.fail("polynomial exponent too large");
        return base.pow(static_cast<unsigned>(e));
    }
    BivarPoly primary() {
        const char c = cur_.peek();
        if (c == '(') {
            cur_.expect('(');
            BivarPoly inner = expr();
            cur_.expect(')');
            return inner;
        }
        if (cur_.accept_word("n")) return BivarPoly::n();
        if (cur_.accept_word("k")) return BivarPoly::k();
        if (std::isdigit(static_cast<unsigned char>(c))) return BivarPoly(Rational(static_cast<long>(cur_.integer())));
        cur_.fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected character '") + c + "'");
    }

    LineCursor& cur_;
};

BivarPoly whole_polynomial(LineCursor& cur) {
    BivarPoly p = PolyParser(cur).expr();
    if (!cur.at_end()) cur.fail("trailing characters after polynomial");
    return p;
}

LinearForm linear_form(LineCursor& cur) {
    const int column = cur.column();
    const BivarPoly p = PolyParser(cur).expr();
    if (p.total_degree() > 1) cur.fail_at(column, "expected a linear form in n and k", Kind::semantic);
    LinearForm lf;
    auto as_int = [&](const Rational& r) -> std::int64_t {
        if (!is_integral(r) || !r.get_num().fits_slong_p())
            cur.fail_at(column, "linear form coefficients must be machine integers", Kind::semantic);
        return r.get_num().get_si();
    };
    lf.a = as_int(p.coeff(1, 0));
    lf.b = as_int(p.coeff(0, 1));
    lf.c = as_int(p.coeff(0, 0));
    return lf;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string render_power(int power) {
    if (power == 1) return "";
    return "^" + std::to_string(power);
}

}  // namespace

BivarPoly parse_polynomial(std::string_view text) {
    LineCursor cur(text, 1, 1);
    return whole_polynomial(cur);
}

TermDocument parse_document(std::string_view text) {
    TermDocument doc;
    bool in_term = false;
    bool done = false;
    bool seen_sign = false;
    bool seen_poly = false;
    bool seen_denom = false;
    std::vector<std::string> provenance;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        std::string_view raw = text.substr(start, stop - start);
        start = stop + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        const std::size_t hash = raw.find('#');
        if (!in_term && !done && hash != std::string_view::npos && trim(raw.substr(0, hash)).empty()) {
            std::string_view note = raw.substr(hash + 1);
            if (!note.empty() && note.front() == ' ') note.remove_prefix(1);
            provenance.emplace_back(note);
            continue;
        }
        std::string_view content = hash == std::string_view::npos ? raw : raw.substr(0, hash);
        if (trim(content).empty()) continue;

        LineCursor cur(content, line_no, 1);
        if (done) cur.fail("content after 'end'");

        if (cur.accept_word("term")) {
            if (in_term) cur.fail("nested 'term'");
            const std::string_view name = trim(content.substr(content.find("term") + 4));
            if (name.empty() || name.find_first_of(" \t") != std::string_view::npos)
                cur.fail("term name must be a single word");
            doc.name = std::string(name);
            in_term = true;
            continue;
        }
        if (!in_term) cur.fail("expected 'term <name>'");

        if (cur.accept_word("end")) {
            if (!cur.at_end()) cur.fail("trailing characters after 'end'");
            in_term = false;
            done = true;
        } else if (cur.accept_word("sign")) {
            if (seen_sign) cur.fail("duplicate 'sign' line", Kind::semantic);
            seen_sign = true;
            cur.expect('(');
            cur.expect('-');
            if (cur.integer() != 1) cur.fail("sign base must be -1");
            cur.expect(')');
            cur.expect('^');
            cur.expect('(');
            doc.term.sign_exponent = linear_form(cur);
            cur.expect(')');
            if (!cur.at_end()) cur.fail("trailing characters after sign");
        } else if (cur.accept_word("base")) {
            const int base_column = cur.column();
            std::int64_t base = 0;
            if (cur.accept('(')) {
                base = cur.signed_integer();
                cur.expect(')');
            } else {
                base = cur.signed_integer();
            }
            if (base > -2 && base < 2)
                cur.fail_at(base_column, "base must satisfy |base| >= 2", Kind::semantic);
            cur.expect('^');
            cur.expect('(');
            LinearForm e = linear_form(cur);
            cur.expect(')');
            if (!cur.at_end()) cur.fail("trailing characters after base");
            doc.term.bases.push_back({base, e});
        } else if (cur.accept_word("factor")) {
            if (!cur.accept_word("binom")) cur.fail("expected 'binom'");
            cur.expect('(');
            BinomFactor f;
            f.top = linear_form(cur);
            cur.expect(',');
            f.bottom = linear_form(cur);
            cur.expect(')');
            if (cur.accept('^')) {
                const bool paren = cur.accept('(');
                const std::int64_t p = cur.signed_integer();
                if (paren) cur.expect(')');
                if (p == 0 || p > 1000 || p < -1000) cur.fail("binomial power must be a nonzero small integer", Kind::semantic);
                f.power = static_cast<int>(p);
            }
            if (!cur.at_end()) cur.fail("trailing characters after factor");
            doc.term.binoms.push_back(f);
        } else if (cur.accept_word("poly")) {
            if (seen_poly) cur.fail("duplicate 'poly' line", Kind::semantic);
            seen_poly = true;
            doc.term.numer_poly = whole_polynomial(cur);
        } else if (cur.accept_word("denompoly")) {
            if (seen_denom) cur.fail("duplicate 'denompoly' line", Kind::semantic);
            seen_denom = true;
            const int column = cur.column();
            doc.term.denom_poly = whole_polynomial(cur);
            if (doc.term.denom_poly.is_zero())
                cur.fail_at(column, "denompoly must be nonzero", Kind::semantic);
        } else {
            cur.fail("unknown directive");
        }
    }
    if (!done) throw ParseError(Kind::syntax, line_no, 1, in_term ? "missing 'end'" : "no term found");

    for (const auto& line : provenance) {
        if (!doc.provenance.empty()) doc.provenance += "\n";
        doc.provenance += line;
    }
    return doc;
}

HypergeometricTerm parse_term(std::string_view text) { return parse_document(text).term; }

std::string serialize_term(const HypergeometricTerm& term, std::string_view name) {
    std::ostringstream out;
    out << "term " << name << "\n";
    if (term.sign_exponent != LinearForm{}) out << "sign (-1)^(" << term.sign_exponent.to_string() << ")\n";
    for (const auto& b : term.bases) {
        if (b.base < 0) out << "base (" << b.base << ")^(" << b.exponent.to_string() << ")\n";
        else out << "base " << b.base << "^(" << b.exponent.to_string() << ")\n";
    }
    for (const auto& f : term.binoms) {
        out << "factor binom(" << f.top.to_string() << "," << f.bottom.to_string() << ")" << render_power(f.power)
            << "\n";
    }
    out << "poly " << term.numer_poly.to_string() << "\n";
    out << "denompoly " << term.denom_poly.to_string() << "\n";
    out << "end\n";
    return out.str();
}

std::string serialize_document(const TermDocument& doc) {
    std::string out;
    if (!doc.provenance.empty()) {
        std::size_t start = 0;
        for (;;) {
            const std::size_t stop = doc.provenance.find('\n', start);
            const std::string_view line = std::string_view(doc.provenance).substr(start, stop - start);
            out += line.empty() ? "#\n" : "# " + std::string(line) + "\n";
            if (stop == std::string::npos) break;
            start = stop + 1;
        }
    }
    return out + serialize_term(doc.term, doc.name);
}

}  // namespace wzaudit

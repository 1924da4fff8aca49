#include <array>
#include <stdexcept>
#include <utility>

#include "wzaudit/hyperterm.hpp"

namespace wzaudit {

namespace {

// Generated from data/terms/*.term at configure time.
#include "builtin_terms_data.inc"

}  // namespace

std::vector<std::string> builtin_term_names() {
    std::vector<std::string> names;
    for (const auto& [name, source] : kBuiltinTerms) names.emplace_back(name);
    return names;
}

std::string_view builtin_term_source(std::string_view name) {
    for (const auto& [builtin, source] : kBuiltinTerms) {
        if (builtin == name) return source;
    }
    throw std::out_of_range("unknown builtin term: " + std::string(name));
}

TermDocument builtin_term(std::string_view name) { return parse_document(builtin_term_source(name)); }

}  // namespace wzaudit

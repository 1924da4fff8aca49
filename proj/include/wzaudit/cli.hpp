#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wzaudit/report.hpp"

namespace wzaudit {

/// Bad flags, unknown identifiers, unreadable or malformed input files.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;  // sumcheck | wzcheck | lemma | ratio | term

    // sumcheck
    std::string sum = "guillera1";
    std::string divisor;  // weak | strong; empty picks strong for guillera*, weak otherwise
    bool valuation_check = false;

    // wzcheck
    std::string pair = "builtin:guillera1";  // builtin:<name> or a directory holding F.term and G.term
    std::string mode = "grid";               // grid | symbolic | telescope
    std::optional<std::int64_t> scale_base;  // required for telescope on a custom pair
    std::int64_t exponent_offset = -1;       // telescope scale exponent is N + offset

    // lemma
    std::string lemma_id;                  // 2.2 | 2.3 | 2.4 | 2.5 | 2.6
    std::string region = "all";            // 2.4: all | k0 | case3a
    std::int64_t full_range = 0;           // 2.4: also scan 0 <= k <= n <= full_range directly

    // ratio
    std::string ratio_id = "all";
    std::string sum_pair = "guillera2";    // pair for telescoped_sum

    // term
    std::string term_action;  // parse | eval | serialize
    std::string term_ref;     // builtin:<name> or a path

    // Ranges; unset fields take per-command defaults.
    std::optional<std::int64_t> n_min;
    std::optional<std::int64_t> n_max;
    std::optional<std::int64_t> m_max;
    std::optional<std::int64_t> k;

    OutputFormat format = OutputFormat::json;
    std::string output_path;  // empty: the stream passed to run()
    unsigned jobs = 1;
};

/// Executes the audit and returns its records in deterministic order.
/// Throws UsageError on invalid configuration or unreadable input.
std::vector<ReportRecord> collect(const RunConfig& config);

/// collect + emit. Returns 0 when no record failed, 1 on any failed record,
/// 2 on usage, parse, configuration or I/O errors (message written to `err`).
/// `term serialize` writes the canonical DSL text instead of records.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace wzaudit

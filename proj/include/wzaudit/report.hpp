#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wzaudit {

enum class Status { pass, fail, skipped };

std::string to_string(Status status);

/// One audit outcome. Values are exact decimal strings; no floating point.
struct ReportRecord {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::pass;
    std::vector<std::pair<std::string, std::string>> witness;
};

enum class OutputFormat { json, csv, human };

/// Throws std::invalid_argument for anything but json/csv/human.
OutputFormat parse_output_format(std::string_view text);

/// json: one object per line with keys check, params, status, witness.
/// csv: header "check,status,params,witness", every field quoted; params and
///      witness are rendered as "key=value;key=value".
/// human: aligned columns.
/// An empty record set produces no output in every format.
void emit(const std::vector<ReportRecord>& records, OutputFormat format, std::ostream& out);

}  // namespace wzaudit

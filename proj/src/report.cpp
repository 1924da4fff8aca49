#include "wzaudit/report.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <json.hpp>

namespace wzaudit {

namespace {

std::string joined(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string out;
    for (const auto& [key, value] : kv) {
        if (!out.empty()) out += ";";
        out += key + "=" + value;
    }
    return out;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_string(Status status) {
    switch (status) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::skipped:
            return "skipped";
    }
    return "fail";
}

OutputFormat parse_output_format(std::string_view text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "human") return OutputFormat::human;
    throw std::invalid_argument("format must be json, csv or human");
}

void emit(const std::vector<ReportRecord>& records, OutputFormat format, std::ostream& out) {
    if (records.empty()) return;
    switch (format) {
        case OutputFormat::json:
            for (const auto& r : records) {
                nlohmann::ordered_json line;
                line["check"] = r.check;
                line["params"] = nlohmann::ordered_json::object();
                for (const auto& [key, value] : r.params) line["params"][key] = value;
                line["status"] = to_string(r.status);
                line["witness"] = nlohmann::ordered_json::object();
                for (const auto& [key, value] : r.witness) line["witness"][key] = value;
                out << line.dump() << "\n";
            }
            break;
        case OutputFormat::csv:
            out << "check,status,params,witness\n";
            for (const auto& r : records) {
                out << csv_quote(r.check) << "," << csv_quote(to_string(r.status)) << "," << csv_quote(joined(r.params))
                    << "," << csv_quote(joined(r.witness)) << "\n";
            }
            break;
        case OutputFormat::human: {
            std::array<std::size_t, 3> width{5, 6, 6};
            for (const auto& r : records) {
                width[0] = std::max(width[0], r.check.size());
                width[1] = std::max(width[1], to_string(r.status).size());
                width[2] = std::max(width[2], joined(r.params).size());
            }
            auto row = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
                out << a << std::string(width[0] - a.size() + 2, ' ') << b << std::string(width[1] - b.size() + 2, ' ')
                    << c << std::string(width[2] - c.size() + 2, ' ') << d << "\n";
            };
            row("check", "status", "params", "witness");
            for (const auto& r : records) row(r.check, to_string(r.status), joined(r.params), joined(r.witness));
            break;
        }
    }
}

}  // namespace wzaudit

#include "wzaudit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wzaudit/hyperterm.hpp"
#include "wzaudit/verify.hpp"
#include "wzaudit/wz.hpp"

namespace wzaudit {

namespace {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

constexpr std::int64_t kMaxRange = 5000;

std::string str(std::int64_t v) { return std::to_string(v); }

Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

std::int64_t bounded(std::optional<std::int64_t> value, std::int64_t fallback, std::int64_t lo, const char* flag) {
    const std::int64_t v = value.value_or(fallback);
    if (v < lo || v > kMaxRange)
        throw UsageError(std::string(flag) + " must lie in [" + str(lo) + "," + str(kMaxRange) + "]");
    return v;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

TermDocument load_term(const std::string& ref) {
    try {
        if (ref.starts_with("builtin:")) return builtin_term(ref.substr(8));
        return parse_document(read_file(ref));
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    } catch (const ParseError& e) {
        throw UsageError(ref + ": " + e.what());
    }
}

WZPairSpec load_pair(const RunConfig& c) {
    if (c.pair.starts_with("builtin:")) {
        try {
            WZPairSpec pair = builtin_pair(c.pair.substr(8));
            if (c.scale_base) pair.scale_base = Integer(static_cast<long>(*c.scale_base));
            if (!c.divisor.empty()) pair.divisor_kind = parse_divisor_kind(c.divisor);
            return pair;
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    const std::filesystem::path dir(c.pair);
    WZPairSpec pair;
    pair.name = dir.filename().string();
    pair.F = load_term((dir / "F.term").string()).term;
    pair.G = load_term((dir / "G.term").string()).term;
    pair.scale_base = Integer(static_cast<long>(c.scale_base.value_or(1)));
    try {
        pair.divisor_kind = parse_divisor_kind(c.divisor.empty() ? "strong" : c.divisor);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return pair;
}

void add_lemma_audit(std::vector<ReportRecord>& out, const LemmaAudit& audit) {
    for (const auto& w : audit.failures) {
        out.push_back({"lemma" + audit.lemma_id, w.params, Status::fail, w.values});
    }
    out.push_back({"lemma" + audit.lemma_id + ".summary",
                   {{"range", audit.range}},
                   status_of(audit.passed()),
                   {{"pass_count", str(audit.pass_count)}, {"failures", str(static_cast<std::int64_t>(audit.failures.size()))}}});
}

std::vector<ReportRecord> sumcheck(const RunConfig& c) {
    SumSpec spec;
    try {
        spec = builtin_sum(c.sum);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    DivisorKind kind = c.sum.starts_with("guillera") ? DivisorKind::strong : DivisorKind::weak;
    if (!c.divisor.empty()) {
        try {
            kind = parse_divisor_kind(c.divisor);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    const std::int64_t n_min = bounded(c.n_min, 2, 2, "--n-min");
    const std::int64_t n_max = bounded(c.n_max, 100, n_min, "--n-max");

    std::vector<ReportRecord> out;
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        const DivisibilityCheck d = check_divisibility(spec, kind, n, c.valuation_check);
        ReportRecord r{"sumcheck", {{"sum", spec.name}, {"divisor", to_string(kind)}, {"n", str(n)}}, Status::pass, {}};
        if (d.divisible) {
            r.witness.emplace_back("quotient", to_string(d.quotient));
        } else {
            r.witness = {{"value", to_string(d.value)}, {"divisor", to_string(d.divisor)},
                         {"remainder", to_string(d.remainder)}};
        }
        bool ok = d.divisible;
        if (d.valuation_agrees) {
            r.witness.emplace_back("valuation_agrees", *d.valuation_agrees ? "true" : "false");
            ok = ok && *d.valuation_agrees;
        }
        r.status = status_of(ok);
        out.push_back(std::move(r));
    }
    return out;
}

ReportRecord divisibility_record(const std::string& check, KeyValues params, const DivisibilityOutcome& d) {
    ReportRecord r{check, std::move(params), status_of(d.divisible), {}};
    if (!d.integral) {
        r.witness = {{"value", to_string(d.value)}, {"integral", "false"}};
    } else if (d.divisible) {
        r.witness = {{"quotient", to_string(d.quotient)}};
    } else {
        r.witness = {{"value", to_string(d.value)}, {"remainder", to_string(d.remainder)}};
    }
    return r;
}

std::vector<ReportRecord> wzcheck(const RunConfig& c) {
    const WZPairSpec pair = load_pair(c);
    std::vector<ReportRecord> out;
    if (c.mode == "grid") {
        const std::int64_t n_max = bounded(c.n_max, 30, 1, "--n-max");
        const GridReport g = wz_grid_check(pair, n_max, c.jobs);
        for (const auto& v : g.violations) {
            out.push_back({"wz.grid",
                           {{"pair", pair.name}, {"n", str(v.n)}, {"k", str(v.k)}},
                           Status::fail,
                           {{"lhs", v.lhs ? to_string(*v.lhs) : ""}, {"rhs", v.rhs ? to_string(*v.rhs) : ""}}});
        }
        out.push_back({"wz.grid.summary",
                       {{"pair", pair.name}, {"n_max", str(n_max)}},
                       status_of(g.passed()),
                       {{"checked", str(g.checked)},
                        {"skipped", str(g.skipped)},
                        {"violations", str(static_cast<std::int64_t>(g.violations.size()))}}});
    } else if (c.mode == "symbolic") {
        const SymbolicResult s = wz_symbolic_check(pair);
        ReportRecord r{"wz.symbolic", {{"pair", pair.name}}, status_of(s.holds), {}};
        if (!s.failure.empty()) {
            r.witness = {{"error", s.failure}};
        } else {
            r.witness = {{"residual", s.residual.to_string()}, {"certificate", wz_certificate(pair).to_string()}};
        }
        out.push_back(std::move(r));
    } else if (c.mode == "telescope") {
        if (!c.pair.starts_with("builtin:") && !c.scale_base)
            throw UsageError("--scale-base is required for telescope mode on a custom pair");
        const std::int64_t n_min = bounded(c.n_min, 2, 2, "--n-min");
        const std::int64_t n_max = bounded(c.n_max, 30, n_min, "--n-max");
        for (std::int64_t N = n_min; N <= n_max; ++N) {
            const TelescopeAudit a = telescope_audit(pair, N, c.exponent_offset);
            for (const auto& t : a.per_term) {
                out.push_back(divisibility_record("telescope.hyp_i_term",
                                                  {{"pair", pair.name}, {"N", str(N)}, {"k", str(t.k)}}, t.outcome));
            }
            out.push_back(divisibility_record("telescope.hyp_i_sum", {{"pair", pair.name}, {"N", str(N)}}, a.g_sum));
            out.push_back(divisibility_record("telescope.hyp_ii", {{"pair", pair.name}, {"N", str(N)}}, a.corner));
            ReportRecord concl =
                divisibility_record("telescope.conclusion", {{"pair", pair.name}, {"N", str(N)}}, a.conclusion);
            concl.witness.emplace_back("telescoping_identity", a.telescoping_identity ? "true" : "false");
            if (pair.name == "guillera1" || pair.name == "guillera2") {
                const bool matches = a.conclusion.value == Rational(eval_sum(builtin_sum(pair.sum_id), N));
                concl.witness.emplace_back("matches_sum", matches ? "true" : "false");
                if (!matches && c.exponent_offset == -1) concl.status = Status::fail;
            }
            if (!a.telescoping_identity) concl.status = Status::fail;
            out.push_back(std::move(concl));
        }
    } else {
        throw UsageError("--mode must be grid, symbolic or telescope");
    }
    return out;
}

std::vector<ReportRecord> lemma(const RunConfig& c) {
    std::vector<ReportRecord> out;
    const std::string& id = c.lemma_id;
    if (id == "2.2") {
        add_lemma_audit(out, lemma22_scan(bounded(c.n_max, 100, 1, "--n-max"), c.jobs));
    } else if (id == "2.3") {
        add_lemma_audit(out, lemma23_scan(bounded(c.n_max, 200, 2, "--n-max"), c.jobs));
    } else if (id == "2.4") {
        Lemma24Options options;
        options.m_max = bounded(c.m_max, 50, 2, "--m-max");
        options.full_range_max = c.full_range;
        options.jobs = c.jobs;
        if (c.full_range < 0 || c.full_range > kMaxRange) throw UsageError("--full-range out of bounds");
        if (c.region == "all") options.region = Lemma24Region::all;
        else if (c.region == "k0") options.region = Lemma24Region::k_zero;
        else if (c.region == "case3a") options.region = Lemma24Region::case_3a;
        else throw UsageError("--region must be all, k0 or case3a");
        add_lemma_audit(out, lemma24_scan(options));
    } else if (id == "2.5") {
        add_lemma_audit(out, lemma25_scan(bounded(c.n_max, 60, 1, "--n-max"), c.jobs));
    } else if (id == "2.6") {
        add_lemma_audit(out, lemma26_point_scan(bounded(c.n_max, 300, 1, "--n-max"), c.jobs));
        add_lemma_audit(out, lemma26_ineq_scan(bounded(c.m_max, 200, 2, "--m-max"), c.jobs));
    } else {
        throw UsageError("--id must be one of 2.2, 2.3, 2.4, 2.5, 2.6");
    }
    return out;
}

std::vector<ReportRecord> ratio(const RunConfig& c) {
    std::vector<std::string> ids;
    if (c.ratio_id == "all") {
        ids = ratio_identity_ids();
    } else {
        const auto known = ratio_identity_ids();
        if (std::find(known.begin(), known.end(), c.ratio_id) == known.end())
            throw UsageError("unknown ratio identity: " + c.ratio_id);
        ids = {c.ratio_id};
    }
    if (c.sum_pair != "guillera1" && c.sum_pair != "guillera2") throw UsageError("--sum-pair must name a builtin pair");
    const std::int64_t n_min = bounded(c.n_min, 2, 2, "--n-min");
    const std::int64_t n_max = bounded(c.n_max, 50, n_min, "--n-max");

    std::vector<ReportRecord> out;
    for (const auto& id : ids) {
        for (std::int64_t N = n_min; N <= n_max; ++N) {
            std::vector<std::optional<std::int64_t>> ks{std::nullopt};
            if (const auto range = ratio_identity_k_range(id, N)) {
                ks.clear();
                if (c.k) {
                    if (*c.k < range->first || *c.k > range->second) continue;
                    ks.push_back(*c.k);
                } else {
                    for (std::int64_t k = range->first; k <= range->second; ++k) ks.push_back(k);
                }
            }
            for (const auto& k : ks) {
                const RatioIdentity r = ratio_identity(id, N, k, c.sum_pair);
                KeyValues params{{"id", id}, {"N", str(N)}};
                if (k) params.emplace_back("k", str(*k));
                if (id == "telescoped_sum") params.emplace_back("pair", c.sum_pair);
                out.push_back({"ratio", std::move(params), status_of(r.equal),
                               {{"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}}});
            }
        }
    }
    return out;
}

std::vector<ReportRecord> term(const RunConfig& c) {
    const TermDocument doc = load_term(c.term_ref);
    if (c.term_action == "parse") {
        const auto& t = doc.term;
        return {{"term.parse",
                 {{"term", doc.name}},
                 Status::pass,
                 {{"sign", t.sign_exponent.to_string()},
                  {"bases", str(static_cast<std::int64_t>(t.bases.size()))},
                  {"binomials", str(static_cast<std::int64_t>(t.binoms.size()))},
                  {"poly", t.numer_poly.to_string()},
                  {"denompoly", t.denom_poly.to_string()}}}};
    }
    if (c.term_action == "eval") {
        if (!c.n_min || !c.k) throw UsageError("term eval requires --n and --k");
        ReportRecord r{"term.eval", {{"term", doc.name}, {"n", str(*c.n_min)}, {"k", str(*c.k)}}, Status::pass, {}};
        try {
            r.witness = {{"value", to_string(eval_term(doc.term, *c.n_min, *c.k))}};
        } catch (const DomainError& e) {
            r.status = Status::fail;
            r.witness = {{"error", e.what()}};
        }
        return {r};
    }
    throw UsageError("term action must be parse, eval or serialize");
}

}  // namespace

std::vector<ReportRecord> collect(const RunConfig& config) {
    if (config.command == "sumcheck") return sumcheck(config);
    if (config.command == "wzcheck") return wzcheck(config);
    if (config.command == "lemma") return lemma(config);
    if (config.command == "ratio") return ratio(config);
    if (config.command == "term") return term(config);
    throw UsageError("unknown command: " + config.command);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!config.output_path.empty()) {
            file.open(config.output_path, std::ios::binary);
            if (!file) throw UsageError("cannot open output file " + config.output_path);
            sink = &file;
        }

        if (config.command == "term" && config.term_action == "serialize") {
            *sink << serialize_document(load_term(config.term_ref));
            sink->flush();
            if (!*sink) throw UsageError("write failed");
            return 0;
        }

        const auto records = collect(config);
        emit(records, config.format, *sink);
        sink->flush();
        if (!*sink) throw UsageError("write failed");
        for (const auto& r : records) {
            if (r.status == Status::fail) return 1;
        }
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace wzaudit

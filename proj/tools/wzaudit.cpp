#include <iostream>

#include <CLI11.hpp>

#include "wzaudit/cli.hpp"
#include "wzaudit/parallel.hpp"

int main(int argc, char** argv) {
    using wzaudit::RunConfig;

    CLI::App app{"Exact audits for WZ pairs, valuation lemmas and binomial-sum divisibility"};
    app.require_subcommand(1);

    RunConfig config;
    config.jobs = wzaudit::default_jobs();
    std::string format = "json";

    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
        cmd->add_option("--output,-o", config.output_path, "Write the report here instead of stdout");
        cmd->add_option("--jobs,-j", config.jobs, "Worker threads (default from WZAUDIT_JOBS)")
            ->check(CLI::Range(1u, 256u));
    };
    auto range = [&](CLI::App* cmd, bool with_m) {
        cmd->add_option("--n-min", config.n_min, "Lower bound of n (or N)");
        cmd->add_option("--n-max", config.n_max, "Upper bound of n (or N)");
        if (with_m) cmd->add_option("--m-max", config.m_max, "Upper bound of m");
    };

    auto* sumcheck = app.add_subcommand("sumcheck", "Divisibility of the binomial sums");
    sumcheck->add_option("--sum", config.sum, "sun_a..sun_e, guillera1, guillera2");
    sumcheck->add_option("--divisor", config.divisor, "weak: 2n*C(2n,n), strong: 2n^2*C(2n,n)^2");
    sumcheck->add_flag("--valuation-check", config.valuation_check, "Cross-check every quotient via p-adic valuations");
    range(sumcheck, false);
    common(sumcheck);

    auto* wzcheck = app.add_subcommand("wzcheck", "WZ relation, certificate and telescoping harness");
    wzcheck->add_option("--pair", config.pair, "builtin:<name> or a directory with F.term and G.term");
    wzcheck->add_option("--mode", config.mode, "grid, symbolic or telescope");
    wzcheck->add_option("--scale-base", config.scale_base, "Scale base B for telescope mode");
    wzcheck->add_option("--divisor", config.divisor, "weak or strong");
    wzcheck->add_option("--exponent-offset", config.exponent_offset, "Telescope scale exponent is N plus this");
    range(wzcheck, false);
    common(wzcheck);

    auto* lemma = app.add_subcommand("lemma", "Auxiliary lemma audits");
    lemma->add_option("--id", config.lemma_id, "2.2, 2.3, 2.4, 2.5 or 2.6")->required();
    lemma->add_option("--region", config.region, "2.4 only: all, k0 or case3a");
    lemma->add_option("--full-range", config.full_range, "2.4 only: also scan 0<=k<=n<=this directly");
    range(lemma, true);
    common(lemma);

    auto* ratio = app.add_subcommand("ratio", "Closed-form ratio identities");
    ratio->add_option("--id", config.ratio_id, "Identity id or all");
    ratio->add_option("--k", config.k, "Restrict to one k");
    ratio->add_option("--sum-pair", config.sum_pair, "Pair used by telescoped_sum");
    range(ratio, false);
    common(ratio);

    auto* term = app.add_subcommand("term", "Term DSL: parse, eval, serialize");
    term->add_option("action", config.term_action, "parse, eval or serialize")->required();
    term->add_option("file", config.term_ref, "builtin:<name> or a .term path")->required();
    term->add_option("--n", config.n_min, "n for eval");
    term->add_option("--k", config.k, "k for eval");
    common(term);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.format = wzaudit::parse_output_format(format);
    return wzaudit::run(config, std::cout, std::cerr);
}

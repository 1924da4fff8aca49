#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wzaudit/cli.hpp"
#include "wzaudit/hyperterm.hpp"

using namespace wzaudit;

namespace {

std::string emitted(const std::vector<ReportRecord>& records, OutputFormat format) {
    std::ostringstream out;
    emit(records, format, out);
    return out.str();
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_config(const RunConfig& c) {
    std::ostringstream out, err;
    const int code = run(c, out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("emit formats") {
    const ReportRecord r{"sumcheck", {{"sum", "guillera1"}, {"n", "2"}}, Status::pass, {{"quotient", "-11"}}};
    CHECK(emitted({r}, OutputFormat::json) ==
          "{\"check\":\"sumcheck\",\"params\":{\"sum\":\"guillera1\",\"n\":\"2\"},\"status\":\"pass\","
          "\"witness\":{\"quotient\":\"-11\"}}\n");
    CHECK(emitted({r}, OutputFormat::csv) ==
          "check,status,params,witness\n\"sumcheck\",\"pass\",\"sum=guillera1;n=2\",\"quotient=-11\"\n");
    const std::string human = emitted({r, r}, OutputFormat::human);
    CHECK(lines(human) == 3);
    CHECK(human.find("quotient=-11") != std::string::npos);
    for (const auto f : {OutputFormat::json, OutputFormat::csv, OutputFormat::human}) CHECK(emitted({}, f).empty());
    CHECK(parse_output_format("csv") == OutputFormat::csv);
    CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}

TEST_CASE("run: sumcheck over 2..50 passes") {
    RunConfig c;
    c.command = "sumcheck";
    c.sum = "guillera1";
    c.divisor = "strong";
    c.n_min = 2;
    c.n_max = 50;
    const Run r = run_config(c);
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 49);
    CHECK(r.out.find("\"status\":\"fail\"") == std::string::npos);
    CHECK(r.out.find("\"quotient\":\"-11\"") != std::string::npos);
}

TEST_CASE("run: eight-floor audit reports the counterexample and exits 1") {
    RunConfig c;
    c.command = "lemma";
    c.lemma_id = "2.4";
    c.m_max = 2;
    const Run r = run_config(c);
    CHECK(r.code == 1);
    CHECK(r.out.find("{\"m\":\"2\",\"n\":\"1\",\"k\":\"1\"}") != std::string::npos);
}

TEST_CASE("run: symbolic check of the second pair") {
    RunConfig c;
    c.command = "wzcheck";
    c.pair = "builtin:guillera2";
    c.mode = "symbolic";
    const Run r = run_config(c);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"residual\":\"0\"") != std::string::npos);
}

TEST_CASE("run: usage errors exit 2") {
    RunConfig c;
    c.command = "sumcheck";
    c.sum = "nope";
    CHECK(run_config(c).code == 2);
    c.sum = "guillera1";
    c.n_min = 10;
    c.n_max = 3;
    CHECK(run_config(c).code == 2);

    RunConfig l;
    l.command = "lemma";
    l.lemma_id = "9.9";
    CHECK(run_config(l).code == 2);

    RunConfig t;
    t.command = "term";
    t.term_action = "parse";
    t.term_ref = "/nonexistent/x.term";
    const Run r = run_config(t);
    CHECK(r.code == 2);
    CHECK(r.err.find("cannot read") != std::string::npos);

    RunConfig o;
    o.command = "sumcheck";
    o.output_path = "/nonexistent/dir/out.json";
    CHECK(run_config(o).code == 2);
}

TEST_CASE("run: custom pair directory and parse errors") {
    const auto dir = std::filesystem::temp_directory_path() / "wzaudit_pair_test";
    std::filesystem::create_directories(dir);
    for (const char* part : {"F", "G"}) {
        std::ofstream(dir / (std::string(part) + ".term")) << builtin_term_source(std::string("guillera1.") + part);
    }
    RunConfig c;
    c.command = "wzcheck";
    c.pair = dir.string();
    c.mode = "symbolic";
    CHECK(run_config(c).code == 0);

    c.mode = "telescope";
    CHECK(run_config(c).code == 2);  // needs --scale-base
    c.scale_base = -4096;
    c.n_max = 6;
    CHECK(run_config(c).code == 0);

    std::ofstream(dir / "G.term") << "term G\nbase 1^(n)\nend\n";
    c.mode = "grid";
    const Run r = run_config(c);
    CHECK(r.code == 2);
    CHECK(r.err.find("semantic error at line 2") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("property: output is identical across job counts") {
    RunConfig c;
    c.command = "lemma";
    c.lemma_id = "2.4";
    c.m_max = 25;
    c.full_range = 8;
    c.jobs = 1;
    const Run a = run_config(c);
    c.jobs = 4;
    const Run b = run_config(c);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("property: failure records carry re-runnable parameters") {
    RunConfig c;
    c.command = "lemma";
    c.lemma_id = "2.4";
    c.m_max = 10;
    for (const auto& r : collect(c)) {
        if (r.status != Status::fail || r.check != "lemma2.4") continue;
        REQUIRE(r.params.size() == 3);
        CHECK(r.params[0].first == "m");
        CHECK(r.params[1].first == "n");
        CHECK(r.params[2].first == "k");
    }
}

TEST_CASE("run: term actions") {
    RunConfig c;
    c.command = "term";
    c.term_ref = "builtin:guillera1.F";
    c.term_action = "serialize";
    Run r = run_config(c);
    CHECK(r.code == 0);
    CHECK(r.out == builtin_term_source("guillera1.F"));

    c.term_action = "eval";
    c.n_min = 1;
    c.k = 1;
    r = run_config(c);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"value\":\"45/32\"") != std::string::npos);

    c.term_action = "explode";
    CHECK(run_config(c).code == 2);
}

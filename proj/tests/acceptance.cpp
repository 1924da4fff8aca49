// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wzaudit/hyperterm.hpp"
#include "wzaudit/parallel.hpp"
#include "wzaudit/verify.hpp"
#include "wzaudit/wz.hpp"

using namespace wzaudit;

namespace {

struct Check {
    std::ostringstream notes;
    bool ok = true;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes << " [" << what << "]";
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

const unsigned kJobs = default_jobs();

void divisibility_range(Check& c, const std::string& sum, DivisorKind kind) {
    const SumSpec spec = builtin_sum(sum);
    for (std::int64_t n = 2; n <= 200; ++n) {
        if (!check_divisibility(spec, kind, n).divisible) {
            c.expect(false, sum + " fails at n=" + std::to_string(n));
            return;
        }
    }
}

void strong_sum_first(Check& c) {
    divisibility_range(c, "guillera1", DivisorKind::strong);
    const auto spec = builtin_sum("guillera1");
    c.expect(eval_sum(spec, 2) == -3168, "S(2) = -3168");
    c.expect(check_divisibility(spec, DivisorKind::strong, 2).quotient == -11, "quotient(2) = -11");
    c.expect(check_divisibility(spec, DivisorKind::strong, 3).quotient == 1907, "quotient(3) = 1907");
    for (std::int64_t n = 2; n <= 40; ++n)
        c.expect(eval_sum(spec, n) == oracle::S(20, 8, 1, 5, false, -4096, n), "oracle sum n=" + std::to_string(n));
}

void strong_sum_second(Check& c) {
    divisibility_range(c, "guillera2", DivisorKind::strong);
    const auto spec = builtin_sum("guillera2");
    c.expect(eval_sum(spec, 2) == 211680, "S(2) = 211680");
    c.expect(check_divisibility(spec, DivisorKind::strong, 2).quotient == 735, "quotient(2) = 735");
    for (std::int64_t n = 2; n <= 40; ++n)
        c.expect(eval_sum(spec, n) == oracle::S(120, 34, 3, 4, true, 65536, n), "oracle sum n=" + std::to_string(n));
}

void weak_sums(Check& c) {
    const std::vector<std::pair<std::string, long>> sums{
        {"sun_a", 1}, {"sun_b", 2}, {"sun_c", 13}, {"sun_d", -19}, {"sun_e", 869}};
    for (const auto& [name, q] : sums) {
        divisibility_range(c, name, DivisorKind::weak);
        c.expect(check_divisibility(builtin_sum(name), DivisorKind::weak, 2).quotient == q, name + " quotient at n=2");
    }
}

void perturbation_flips(Check& c, const std::string& name) {
    const WZPairSpec base = builtin_pair(name);
    std::vector<std::pair<std::string, WZPairSpec>> variants;
    for (std::size_t i = 0; i < base.G.binoms.size(); ++i) {
        WZPairSpec dropped = base;
        dropped.G.binoms.erase(dropped.G.binoms.begin() + static_cast<std::ptrdiff_t>(i));
        variants.emplace_back("drop binomial " + std::to_string(i), dropped);
        WZPairSpec raised = base;
        raised.G.binoms[i].power += 1;
        variants.emplace_back("raise binomial " + std::to_string(i), raised);
    }
    for (std::size_t i = 0; i < base.G.bases.size(); ++i) {
        WZPairSpec changed = base;
        changed.G.bases[i].base *= 2;
        variants.emplace_back("change base " + std::to_string(i), changed);
    }
    WZPairSpec sign = base;
    sign.G.sign_exponent.c += 1;
    variants.emplace_back("flip sign", sign);
    WZPairSpec poly = base;
    poly.G.numer_poly = poly.G.numer_poly * BivarPoly(make_rational(3, 2));
    variants.emplace_back("scale polynomial", poly);
    WZPairSpec denom = base;
    denom.G.denom_poly = denom.G.denom_poly * BivarPoly::linear(1, 1, 1);
    variants.emplace_back("extra denominator", denom);

    for (const auto& [label, v] : variants) {
        c.expect(!wz_symbolic_check(v).holds, name + ": " + label + " still passes symbolically");
    }
}

void wz_relation(Check& c) {
    for (const auto& name : builtin_pair_names()) {
        const auto pair = builtin_pair(name);
        const GridReport g = wz_grid_check(pair, 60, kJobs);
        c.expect(g.passed() && g.checked == 1830 && g.skipped == 0, name + " grid");
        const SymbolicResult s = wz_symbolic_check(pair);
        c.expect(s.holds && s.residual.to_string() == "0", name + " residual 0");
        perturbation_flips(c, name);
    }
    const auto [lhs, rhs] = wz_relation_sides(builtin_pair("guillera1"), 1, 1);
    c.expect(lhs == make_rational(-209, 128) && rhs == make_rational(-209, 128), "(1,1) sides = -209/128");
}

void telescoping(Check& c) {
    for (const auto& name : builtin_pair_names()) {
        const auto pair = builtin_pair(name);
        const auto spec = builtin_sum(pair.sum_id);
        for (std::int64_t N = 2; N <= 60; ++N) {
            const TelescopeAudit a = telescope_audit(pair, N);
            const bool ok = a.per_term_passed() && a.g_sum.divisible && a.corner.divisible && a.conclusion.divisible &&
                            a.telescoping_identity && a.conclusion.value == Rational(eval_sum(spec, N));
            if (!ok) {
                c.expect(false, name + " N=" + std::to_string(N));
                break;
            }
        }
    }
}

void auxiliary_audits(Check& c) {
    c.expect(lemma22_scan(200, kJobs).passed(), "2.2 on n <= 200");
    c.expect(lemma23_scan(500, kJobs).passed(), "2.3 on n <= 500");
    const auto l23 = lemma23_point(3);
    c.expect(l23.division.quotient == 675 && l23.closed_form == 675, "2.3 at n=3 is 675");
    c.expect(lemma25_scan(200, kJobs).passed(), "2.5 on n <= 200 with valuation cross-check");
    c.expect(lemma26_point_scan(300, kJobs).passed(), "2.6 divisibility on n <= 300");
    c.expect(lemma26_ineq_scan(200, kJobs).passed(), "2.6 inequality on m <= 200");
}

void eight_floor(Check& c) {
    Lemma24Options o{.m_max = 2, .region = Lemma24Region::all, .full_range_max = 10, .jobs = kJobs};
    const LemmaAudit a = lemma24_scan(o);
    auto margin_at = [&](const char* n, const char* k) -> std::string {
        for (const auto& w : a.failures) {
            if (w.params == std::vector<std::pair<std::string, std::string>>{{"m", "2"}, {"n", n}, {"k", k}}) {
                for (const auto& [key, value] : w.values)
                    if (key == "margin") return value;
            }
        }
        return "none";
    };
    c.expect(margin_at("1", "1") == "-1", "margin -1 at (2,1,1)");
    c.expect(margin_at("3", "1") == "-1", "margin -1 at (2,3,1)");

    Lemma24Options k0{.m_max = 200, .region = Lemma24Region::k_zero, .full_range_max = 0, .jobs = kJobs};
    c.expect(lemma24_scan(k0).passed(), "k = 0 slice clean for m <= 200");
    Lemma24Options c3{.m_max = 200, .region = Lemma24Region::case_3a, .full_range_max = 0, .jobs = kJobs};
    const LemmaAudit case3a = lemma24_scan(c3);
    c.expect(case3a.passed() && case3a.pass_count > 0, "case-3a region clean for m <= 200");
}

void ratio_identities(Check& c) {
    for (const auto& id : ratio_identity_ids()) {
        for (std::int64_t N = 2; N <= 100; ++N) {
            const auto range = ratio_identity_k_range(id, N);
            bool ok = true;
            if (!range) {
                ok = ratio_identity(id, N).equal;
            } else {
                for (std::int64_t k = range->first; k <= range->second && ok; ++k) ok = ratio_identity(id, N, k).equal;
            }
            if (!ok) {
                c.expect(false, id + " at N=" + std::to_string(N));
                break;
            }
        }
    }
    auto spot = [&](const char* id, std::int64_t N, std::optional<std::int64_t> k, long expected) {
        const auto r = ratio_identity(id, N, k);
        c.expect(r.equal && r.lhs == expected, std::string(id) + " spot");
    };
    spot("g1_col1", 2, std::nullopt, 9);
    spot("f1_corner", 2, std::nullopt, -20);
    spot("catalan_split", 3, std::nullopt, 14);
    spot("g1_gen", 3, 2, -2800);
    spot("g2_gen", 2, 1, 315);
    spot("f2_corner", 2, std::nullopt, 420);
}

void parser(Check& c) {
    const std::vector<std::pair<std::string, std::function<Rational(std::int64_t, std::int64_t)>>> hand{
        {"guillera1.F", oracle::F1}, {"guillera1.G", oracle::G1},
        {"guillera2.F", oracle::F2}, {"guillera2.G", oracle::G2}};
    std::mt19937 rng(1);
    for (const auto& [name, formula] : hand) {
        const std::string src(builtin_term_source(name));
        TermDocument doc;
        try {
            doc = parse_document(src);
        } catch (const ParseError& e) {
            c.expect(false, name + " parse: " + e.what());
            continue;
        }
        c.expect(serialize_document(doc) == src, name + " round trip");
        for (int i = 0; i < 20; ++i) {
            const std::int64_t n = std::uniform_int_distribution<std::int64_t>(0, 30)(rng);
            const std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, n)(rng);
            c.expect(eval_term(doc.term, n, k) == formula(n, k),
                     name + " at (" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "guillera1 sum divisible by 2n^2 C(2n,n)^2 for 2 <= n <= 200", 30, strong_sum_first},
        {2, "guillera2 sum divisible by 2n^2 C(2n,n)^2 for 2 <= n <= 200", 30, strong_sum_second},
        {3, "five weak-divisor sums divisible by 2n C(2n,n) for 2 <= n <= 200", 30, weak_sums},
        {4, "WZ relation: grid, symbolic residual, perturbations", 60, wz_relation},
        {5, "telescoping harness for both pairs, 2 <= N <= 60", 60, telescoping},
        {6, "binomial quotients, W integrality, factorial quotient and floor inequality", 120, auxiliary_audits},
        {7, "eight-floor inequality: counterexamples and clean regions", 60, eight_floor},
        {8, "ratio identities on 2 <= N <= 100", 60, ratio_identities},
        {9, "term DSL parse, evaluate, round trip", 30, parser},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit_seconds) check.expect(false, "over time limit");
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (check.ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << " (" << timing
                  << ")" << check.notes.str() << "\n";
        if (!check.ok) ++failed;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

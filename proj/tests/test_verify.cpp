#include <doctest.h>

#include "oracle.hpp"
#include "wzaudit/verify.hpp"

using namespace wzaudit;

TEST_CASE("sum values") {
    CHECK(eval_sum(builtin_sum("guillera1"), 2) == -3168);
    CHECK(eval_sum(builtin_sum("guillera1"), 3) == 13730400);
    CHECK(eval_sum(builtin_sum("guillera2"), 2) == 211680);
    CHECK_THROWS_AS(builtin_sum("sun_z"), std::out_of_range);
    CHECK(builtin_sums().size() == 7);
}

TEST_CASE("property: sums agree with direct summation") {
    for (const auto& s : builtin_sums()) {
        for (std::int64_t n = 1; n <= 25; ++n) {
            INFO(s.name << " n=" << n);
            REQUIRE(eval_sum(s, n) ==
                    oracle::S(s.c2, s.c1, s.c0, static_cast<int>(s.central_power), s.include_quad_central, s.base, n));
        }
    }
}

TEST_CASE("divisibility spot quotients") {
    CHECK(check_divisibility(builtin_sum("guillera1"), DivisorKind::strong, 2).quotient == -11);
    CHECK(check_divisibility(builtin_sum("guillera1"), DivisorKind::strong, 3).quotient == 1907);
    CHECK(check_divisibility(builtin_sum("guillera2"), DivisorKind::strong, 2).quotient == 735);
    const std::vector<std::pair<const char*, long>> weak_sums{
        {"sun_a", 1}, {"sun_b", 2}, {"sun_c", 13}, {"sun_d", -19}, {"sun_e", 869}};
    for (const auto& [name, q] : weak_sums) {
        const auto d = check_divisibility(builtin_sum(name), DivisorKind::weak, 2);
        CHECK(d.divisible);
        CHECK(d.quotient == q);
    }
}

TEST_CASE("property: valuation cross-check agrees with division") {
    for (const auto& s : builtin_sums()) {
        for (const auto kind : {DivisorKind::weak, DivisorKind::strong}) {
            for (std::int64_t n = 2; n <= 30; ++n) {
                const auto d = check_divisibility(s, kind, n, true);
                REQUIRE(d.valuation_agrees.has_value());
                INFO(s.name << " " << to_string(kind) << " n=" << n);
                REQUIRE(*d.valuation_agrees);
                REQUIRE(d.divisible == (oracle::S(s.c2, s.c1, s.c0, static_cast<int>(s.central_power),
                                                  s.include_quad_central, s.base, n) %
                                            (kind == DivisorKind::weak ? oracle::weak(n) : oracle::strong(n)) ==
                                        0));
            }
        }
    }
}

TEST_CASE("divisor valuations follow Legendre") {
    for (std::int64_t n = 1; n <= 40; ++n) {
        for (const auto p : primes_upto(2 * n)) {
            REQUIRE(divisor_valuation(DivisorKind::strong, n, p) ==
                    int_valuation(p, divisor(DivisorKind::strong, n)));
            REQUIRE(divisor_valuation(DivisorKind::weak, n, p) == int_valuation(p, divisor(DivisorKind::weak, n)));
        }
    }
}

TEST_CASE("binomial quotient points (ids 2.2, 2.3)") {
    CHECK(lemma22_point(1, 1).quotient == 2);
    CHECK(lemma22_point(2, 1).quotient == 72);
    CHECK(lemma22_point(2, 2).quotient == 20);
    CHECK(lemma22_point(2, 2).divisible);
    for (const auto& [n, v] : std::vector<std::pair<long, long>>{{2, 9}, {3, 675}, {4, 49000}}) {
        const auto r = lemma23_point(n);
        CHECK(r.division.quotient == v);
        CHECK(r.closed_form == v);
        CHECK(r.identity_holds);
    }
    CHECK_THROWS_AS(lemma23_point(1), std::invalid_argument);
}

TEST_CASE("eight-floor margins") {
    CHECK(floor_margin(2, 2, 1).margin == 0);
    CHECK(floor_margin(3, 2, 1).margin == 2);
    const auto a = floor_margin(2, 1, 1);
    CHECK(a.lhs == 3);
    CHECK(a.rhs == 4);
    CHECK(a.violation);
    const auto b = floor_margin(2, 3, 1);
    CHECK(b.lhs == 9);
    CHECK(b.rhs == 10);
    CHECK(b.margin == -1);
    CHECK(floor_margin(2, 3, 3).margin == -1);
}

TEST_CASE("property: eight-floor margin matches the oracle and the fractional form") {
    for (std::int64_t m = 2; m <= 12; ++m) {
        for (std::int64_t n = 0; n <= 30; ++n) {
            for (std::int64_t k = 0; k <= n; ++k) {
                const auto r = floor_margin(m, n, k);
                REQUIRE(r.margin == oracle::margin24(m, n, k));
                REQUIRE(fractional_margin(m, n, k) == r.margin);
                // only residues matter
                REQUIRE(floor_margin(m, n % m, k % m).margin == r.margin);
            }
        }
    }
}

TEST_CASE("eight-floor scans") {
    Lemma24Options o;
    o.m_max = 7;
    const auto residues = lemma24_scan(o);
    REQUIRE(residues.failures.size() == 3);
    CHECK(residues.failures[0].params == std::vector<std::pair<std::string, std::string>>{
                                             {"m", "2"}, {"n", "1"}, {"k", "1"}});
    CHECK(residues.failures[1].params[0].second == "4");
    CHECK(residues.failures[2].params[0].second == "6");

    o.m_max = 2;
    o.full_range_max = 3;
    const auto full = lemma24_scan(o);
    bool found = false;
    for (const auto& w : full.failures) {
        if (w.params == std::vector<std::pair<std::string, std::string>>{{"m", "2"}, {"n", "3"}, {"k", "1"}}) {
            found = true;
            CHECK(w.values[2] == std::pair<std::string, std::string>{"margin", "-1"});
        }
    }
    CHECK(found);

    Lemma24Options k0{.m_max = 60, .region = Lemma24Region::k_zero, .full_range_max = 0, .jobs = 2};
    CHECK(lemma24_scan(k0).passed());
    Lemma24Options c3{.m_max = 60, .region = Lemma24Region::case_3a, .full_range_max = 0, .jobs = 2};
    const auto c3a = lemma24_scan(c3);
    CHECK(c3a.passed());
    CHECK(c3a.pass_count > 0);
}

TEST_CASE("property: eight-floor scan is independent of job count") {
    Lemma24Options a{.m_max = 30, .region = Lemma24Region::all, .full_range_max = 10, .jobs = 1};
    Lemma24Options b = a;
    b.jobs = 3;
    const auto ra = lemma24_scan(a);
    const auto rb = lemma24_scan(b);
    REQUIRE(ra.failures.size() == rb.failures.size());
    CHECK(ra.pass_count == rb.pass_count);
    for (std::size_t i = 0; i < ra.failures.size(); ++i) CHECK(ra.failures[i].params == rb.failures[i].params);
}

TEST_CASE("integrality of W") {
    CHECK(lemma25_W(1, 1) == 3);
    CHECK(lemma25_W(2, 1) == 2520);
    CHECK(lemma25_W(3, 1) == 1247400);
    CHECK(lemma25_W(3, 3) == 18018);
    CHECK(lemma25_W(1, 0) == 4);
    for (std::int64_t n = 1; n <= 15; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            REQUIRE(lemma25_W(n, k) == lemma25_W_binomial(n, k));
            for (const std::int64_t p : {2, 3, 5, 7}) {
                REQUIRE(lemma25_valuation_sum(p, n, k) == rat_valuation(p, lemma25_W(n, k)));
            }
        }
    }
    CHECK(lemma25_scan(40, 2).passed());
}

TEST_CASE("factorial quotient and its floor inequality") {
    // (6n-5)!(n-1)! / ((2n-1)!(2n-2)!(3n-3)!)
    CHECK(lemma26_point(1).quotient == 1);
    CHECK(lemma26_point(2).quotient == 70);
    CHECK(lemma26_point(3).quotient == 6006);
    for (std::int64_t n = 1; n <= 30; ++n) {
        const mpz_class num = oracle::fact(6 * n - 5) * oracle::fact(n - 1);
        const mpz_class den = oracle::fact(2 * n - 1) * oracle::fact(2 * n - 2) * oracle::fact(3 * n - 3);
        REQUIRE(lemma26_point(n).divisible);
        REQUIRE(lemma26_point(n).quotient == num / den);
    }
    CHECK(lemma26_ineq_scan(60).passed());
    CHECK(lemma26_point_scan(60).passed());
}

TEST_CASE("audit scans over ranges") {
    const auto l22 = lemma22_scan(40);
    CHECK(l22.passed());
    CHECK(l22.pass_count == 40 * 41 / 2);
    CHECK(lemma23_scan(80).passed());
}

TEST_CASE("ratio identity spot values") {
    auto lhs = [](const char* id, std::int64_t N, std::optional<std::int64_t> k = std::nullopt) {
        const auto r = ratio_identity(id, N, k);
        CHECK(r.equal);
        return r.lhs;
    };
    CHECK(lhs("g1_col1", 2) == 9);
    CHECK(lhs("f1_corner", 2) == -20);
    CHECK(lhs("catalan_split", 3) == 14);
    CHECK(lhs("g1_gen", 3, 2) == -2800);
    CHECK(lhs("g2_gen", 2, 1) == 315);
    CHECK(lhs("g2_gen", 2, 2) == 420);
    CHECK(lhs("f2_corner", 2) == 420);
    CHECK(lhs("f2_corner", 3) == 576576);
    CHECK(ratio_identity("telescoped_sum", 2, std::nullopt, "guillera1").lhs == -3168);
    CHECK_THROWS_AS(ratio_identity("bogus", 2), std::invalid_argument);
    CHECK_THROWS_AS(ratio_identity("g1_gen", 3), std::invalid_argument);
    CHECK_THROWS_AS(ratio_identity("g1_gen", 3, 7), std::invalid_argument);
}

TEST_CASE("property: ratio identities hold on a range") {
    for (const auto& id : ratio_identity_ids()) {
        for (std::int64_t N = 2; N <= 30; ++N) {
            const auto range = ratio_identity_k_range(id, N);
            if (!range) {
                REQUIRE(ratio_identity(id, N).equal);
                continue;
            }
            for (std::int64_t k = range->first; k <= range->second; ++k) REQUIRE(ratio_identity(id, N, k).equal);
        }
    }
}

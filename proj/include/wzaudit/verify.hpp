#pragma once

// The concrete binomial sums and their divisors, the lemma-level audits, and
// the closed-form ratio identities used to prove divisibility for the two
// builtin WZ pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wzaudit/exact.hpp"
#include "wzaudit/wz.hpp"

namespace wzaudit {

/// sum_{k=0}^{n-1} (c2 k^2 + c1 k + c0) C(2k,k)^central_power [C(4k,2k)] base^(n-k-1)
struct SumSpec {
    std::string name;
    std::int64_t c2 = 0;
    std::int64_t c1 = 0;
    std::int64_t c0 = 0;
    unsigned central_power = 1;
    bool include_quad_central = false;
    std::int64_t base = 1;
};

/// sun_a..sun_e (weak-divisor family) and guillera1, guillera2.
std::vector<SumSpec> builtin_sums();
/// Throws std::out_of_range for an unknown name.
SumSpec builtin_sum(std::string_view name);

Integer eval_sum(const SumSpec& spec, std::int64_t n);

struct DivisibilityCheck {
    std::int64_t n = 0;
    Integer value;
    Integer divisor;
    Integer quotient;
    Integer remainder;
    bool divisible = false;
    /// Set when the valuation cross-check ran: true when "v_p(divisor) <=
    /// v_p(value) for all primes p <= 2n" (v_p(divisor) from Legendre's
    /// formula) reaches the same verdict as the division.
    std::optional<bool> valuation_agrees;
};

DivisibilityCheck check_divisibility(const SumSpec& spec, DivisorKind kind, std::int64_t n,
                                     bool valuation_cross_check = false);

/// Independent of `divisor()`: v_p(2n C(2n,n)) or v_p(2n^2 C(2n,n)^2) by Legendre.
std::int64_t divisor_valuation(DivisorKind kind, std::int64_t n, std::int64_t p);

// ---------------------------------------------------------------------------
// Lemma-level point checks.

struct PointQuotient {
    Integer dividend;
    Integer divisor;
    Integer quotient;
    Integer remainder;
    bool divisible = false;
};

/// (2n+2k-1) C(2k,k) | n C(2n,n) C(2n+2k,n+k) C(n+k,2k), 0 <= k <= n.
PointQuotient lemma22_point(std::int64_t n, std::int64_t k);

struct Lemma23Result {
    PointQuotient division;        // n^2 (n+1) C(2n,n) C(2n-2,n-1) C(2n+2,n+1) / (64 (2n+1))
    Integer closed_form;           // (2n-1)^2 C(2n-3,n-1)^3
    bool identity_holds = false;   // division exact and quotient == closed_form
};

Lemma23Result lemma23_point(std::int64_t n);

/// LHS - RHS of the eight-floor inequality
///   [(4n+2k-2)/m] + 3[k/m] + [2n/m] >= 3[2k/m] + [n/m] + [(n-1)/m] + 2[(n-k)/m] + [(2n+k-1)/m].
struct MarginRecord {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::int64_t margin = 0;
    bool violation = false;
};

MarginRecord floor_margin(std::int64_t m, std::int64_t n, std::int64_t k);

/// The same margin computed from fractional parts {x/m}; depends only on
/// n, k mod m. Equal to floor_margin(...).margin for every input.
Rational fractional_margin(std::int64_t m, std::int64_t n, std::int64_t k);

struct Witness {
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::string>> values;
};

struct LemmaAudit {
    std::string lemma_id;
    std::string range;
    std::int64_t pass_count = 0;
    std::vector<Witness> failures;

    bool passed() const { return failures.empty(); }
};

enum class Lemma24Region {
    all,
    k_zero,   // only k = 0
    case_3a,  // 2k >= m and 3m/2 <= 2n+k-1 < 2m
};

struct Lemma24Options {
    std::int64_t m_max = 2;
    Lemma24Region region = Lemma24Region::all;
    /// When positive, additionally scan every 0 <= k <= n <= full_range_max
    /// directly (not reduced mod m).
    std::int64_t full_range_max = 0;
    unsigned jobs = 1;
};

/// Residues 0 <= k <= n <= m-1 plus the boundary row n = m, for 2 <= m <= m_max.
/// Each point also cross-checks the floor margin against fractional_margin.
LemmaAudit lemma24_scan(const Lemma24Options& options);

/// k!^3 (2n)! (2k+4n-2)! / ((2k)!^3 n! (n-1)! (n-k)!^2 (k+2n-1)!).
Rational lemma25_W(std::int64_t n, std::int64_t k);
/// C(2n,n) C(n,k) C(k+n,2k) C(k+2n-1,n-1) C(2k+4n-2,k+2n-1) / C(2k,k)^2.
Rational lemma25_W_binomial(std::int64_t n, std::int64_t k);
/// sum_i A_{p^i}: the eight-floor margin summed over m = p, p^2, ... <= 4n+2k-2.
std::int64_t lemma25_valuation_sum(std::int64_t p, std::int64_t n, std::int64_t k);

/// For 1 <= n <= n_max, 0 <= k <= n: both forms of W agree and are integers,
/// and for each prime p <= 4n+2k-2 the floor sum equals v_p(W) and is >= 0.
LemmaAudit lemma25_scan(std::int64_t n_max, unsigned jobs = 1);

/// ((2n-1)! (2n-2)! (3n-3)!) | (6n-5)! (n-1)!
PointQuotient lemma26_point(std::int64_t n);

/// [(6n-5)/m] + [(n-1)/m] - [(2n-1)/m] - [(2n-2)/m] - [(3n-3)/m]
std::int64_t lemma26_margin(std::int64_t m, std::int64_t n);

/// All 2 <= m <= m_max, 1 <= n <= m.
LemmaAudit lemma26_ineq_scan(std::int64_t m_max, unsigned jobs = 1);

// Range sweeps of the point checks; failures carry the point and the values.
LemmaAudit lemma22_scan(std::int64_t n_max, unsigned jobs = 1);     // 1 <= k <= n <= n_max
LemmaAudit lemma23_scan(std::int64_t n_max, unsigned jobs = 1);     // 2 <= n <= n_max
LemmaAudit lemma26_point_scan(std::int64_t n_max, unsigned jobs = 1);  // 1 <= n <= n_max

// ---------------------------------------------------------------------------
// Closed-form ratio identities.

struct RatioIdentity {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// g1_col1, g1_gen, f1_corner, catalan_split, g2_gen, f2_corner, telescoped_sum.
std::vector<std::string> ratio_identity_ids();

/// Admissible k range for ids taking k; nullopt for ids without k.
std::optional<std::pair<std::int64_t, std::int64_t>> ratio_identity_k_range(std::string_view id, std::int64_t N);

/// `pair` selects the WZ pair for telescoped_sum ("guillera1"/"guillera2").
/// Throws std::invalid_argument for unknown ids, a missing or out-of-range k,
/// or N < 2.
RatioIdentity ratio_identity(std::string_view id, std::int64_t N, std::optional<std::int64_t> k = std::nullopt,
                             std::string_view pair = "guillera2");

}  // namespace wzaudit

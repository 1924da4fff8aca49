#pragma once

// WZ-pair checks: the relation F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k) on a
// grid and symbolically, the certificate C = F/G, and the telescoping
// divisibility harness
//
//   P(N) | B^e * sum_{n=0}^{N-1} F(n,0)
//
// which follows from P(N) | B^e * G(N,k) for 1 <= k < N (hypothesis i) and
// P(N) | B^e * F(N-1,N-1) (hypothesis ii), with e = N - 1 by default.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wzaudit/exact.hpp"
#include "wzaudit/hyperterm.hpp"
#include "wzaudit/polyalg.hpp"

namespace wzaudit {

enum class DivisorKind { weak, strong };

/// 2N*C(2N,N) (weak) or 2N^2*C(2N,N)^2 (strong).
Integer divisor(DivisorKind kind, std::int64_t n);

std::string to_string(DivisorKind kind);
/// Throws std::invalid_argument for anything but "weak"/"strong".
DivisorKind parse_divisor_kind(std::string_view text);

struct WZPairSpec {
    std::string name;
    HypergeometricTerm F;
    HypergeometricTerm G;
    Integer scale_base;
    DivisorKind divisor_kind = DivisorKind::strong;
    std::string sum_id;
};

/// "guillera1" or "guillera2"; throws std::out_of_range otherwise.
WZPairSpec builtin_pair(std::string_view name);
std::vector<std::string> builtin_pair_names();

struct GridViolation {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::optional<Rational> lhs;  // empty when evaluation failed
    std::optional<Rational> rhs;
    std::string error;
};

struct GridReport {
    std::int64_t n_max = 0;
    std::int64_t checked = 0;
    std::int64_t skipped = 0;
    std::vector<GridViolation> violations;

    bool passed() const { return violations.empty(); }
};

/// Sides of the WZ relation at one point.
std::pair<Rational, Rational> wz_relation_sides(const WZPairSpec& pair, std::int64_t n, std::int64_t k);

/// Exact check on 1 <= k <= n <= n_max. Points whose denominators vanish are
/// skipped and counted.
GridReport wz_grid_check(const WZPairSpec& pair, std::int64_t n_max, unsigned jobs = 1);

struct SymbolicResult {
    bool holds = false;
    RationalFunction residual;
    std::string failure;  // set when the terms are not proportional
};

/// Writes F(n,k-1) - F(n,k) - G(n+1,k) + G(n,k) as R(n,k) * G(n,k) and tests R == 0.
SymbolicResult wz_symbolic_check(const WZPairSpec& pair);

/// C(n,k) = F(n,k)/G(n,k). Throws DomainError when F and G are not proportional.
RationalFunction wz_certificate(const WZPairSpec& pair);

struct DivisibilityOutcome {
    bool integral = true;  // false when the scaled value is not an integer
    bool divisible = false;
    Rational value;
    Integer quotient;
    Integer remainder;
};

/// value / divisor by exact division with remainder.
DivisibilityOutcome divide_check(const Rational& value, const Integer& divisor);

struct TelescopeTerm {
    std::int64_t k = 0;
    DivisibilityOutcome outcome;  // of B^e * G(N,k)
};

struct TelescopeAudit {
    std::int64_t N = 0;
    std::int64_t scale_exponent = 0;
    Integer divisor;
    std::vector<TelescopeTerm> per_term;
    DivisibilityOutcome g_sum;       // hypothesis (i), summed
    DivisibilityOutcome corner;      // hypothesis (ii)
    DivisibilityOutcome conclusion;
    bool telescoping_identity = false;  // conclusion == g_sum + corner

    bool per_term_passed() const;
    bool passed() const;
};

/// Scale exponent is N + exponent_offset; the default -1 gives B^(N-1).
TelescopeAudit telescope_audit(const WZPairSpec& pair, std::int64_t N, std::int64_t exponent_offset = -1);

}  // namespace wzaudit

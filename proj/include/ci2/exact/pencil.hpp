#pragma once

#include "ci2/exact/quadratic_form.hpp"
#include "ci2/exact/univariate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ci2 {

/// Which points of P^1 the pencil minimum ranges over.
enum class PencilSemantics {
    /// Closure over Q, rational points over F_p.
    Default,
    /// Points over the algebraic closure of the base field.
    AlgebraicClosure,
    /// Points of P^1 over the base field itself. Prime fields only.
    RationalPoints,
};

struct PencilRankResult {
    std::size_t min_rank = 0;
    /// The minimum is attained at (1:0), i.e. by the first form alone.
    bool attained_at_infinity = false;
    /// Monic polynomial whose roots are the affine
    /// points t (pencil member t*q1 + q2) attaining the minimum; empty when the
    /// minimum is the generic rank or only the point at infinity attains it.
    std::optional<UPoly> root_locus;
    PencilSemantics semantics = PencilSemantics::Default;
};

/// min over (l1:l2) in P^1 of rank(l1*q1 + l2*q2), decided exactly: the generic
/// rank comes from fraction-free elimination over K[t], and the rank at the
/// roots of its pivots from elimination modulo those pivots.
PencilRankResult pencil_min_rank_detailed(const QuadraticForm& q1, const QuadraticForm& q2,
                                          PencilSemantics semantics = PencilSemantics::Default);

inline std::size_t pencil_min_rank(const QuadraticForm& q1, const QuadraticForm& q2,
                                   PencilSemantics semantics = PencilSemantics::Default) {
    return pencil_min_rank_detailed(q1, q2, semantics).min_rank;
}

struct SetRankResult {
    std::size_t min_rank = 0;
    /// Coefficients (over F_p) of a combination attaining the minimum.
    std::vector<std::uint64_t> witness;
    /// Primes the enumeration ran over.
    std::vector<std::uint64_t> primes;
};

/// Primes used when a rational set of forms is enumerated modulo p.
inline constexpr std::uint64_t kSetRankPrimes[] = {10007, 10009, 10037};

/// min over l in P^{k-1}(F_p) of rank(sum l_i q_i) by exhaustive enumeration,
/// k <= 4. Rational input is reduced modulo kSetRankPrimes and the minimum of the
/// three runs is reported. Throws BudgetExceeded past `max_points` points.
SetRankResult set_min_rank_detailed(const std::vector<QuadraticForm>& forms, std::uint64_t max_points = 20'000'000);

inline std::size_t set_min_rank(const std::vector<QuadraticForm>& forms) {
    return set_min_rank_detailed(forms).min_rank;
}

std::string to_string(PencilSemantics s);

}  // namespace ci2

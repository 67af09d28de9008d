#pragma once

#include "ci2/poly/polynomial.hpp"
#include "ci2/zerodim/dimension.hpp"
#include "ci2/zerodim/galois_field.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ci2 {

inline constexpr std::uint64_t kDefaultPointBudget = 50'000'000;

/// Number of points of V(gens) in P^{n-1}(F_q). Generators must be over F_p
/// with p the characteristic of `field`. Throws BudgetExceeded past `max_points`.
std::uint64_t count_projective_points(const std::vector<Polynomial>& gens, const GaloisField& field,
                                      std::uint64_t max_points = kDefaultPointBudget);

struct PointCountResult {
    std::uint64_t p = 0;
    /// counts[e-1] = #V(F_{p^e}).
    std::vector<std::uint64_t> counts;
    /// floor(log_q(2N)) at the largest extension with points, clamped to [0, n-1];
    /// -1 when no extension has points.
    long dimension_estimate = -1;
};

/// Dimension estimate from the growth #V(F_{p^e}) ~ c p^{ed}, e = 1..extensions.
/// Exact whenever 1 <= c < q/2 at the largest q, which holds for unions of few
/// linear subspaces. Rational generators are reduced modulo p.
PointCountResult dimension_by_point_count(const std::vector<Polynomial>& gens, std::uint64_t p, unsigned extensions,
                                          std::uint64_t max_points = kDefaultPointBudget);

enum class IrreducibilityVerdict { LikelyIrreducible, ReducibleWitness, Inconclusive };

std::string to_string(IrreducibilityVerdict v);

struct IrreducibilityResult {
    IrreducibilityVerdict verdict = IrreducibilityVerdict::Inconclusive;
    std::string reason;
    /// Per trial, the curve-section point counts over F_{p^e}, e = 1..extensions.
    std::vector<std::vector<std::uint64_t>> slice_counts;
};

struct IrreducibilityOptions {
    unsigned extensions = 2;
    unsigned trials = 2;
    /// Prime used for counting; 0 means the generators' field (101 over Q).
    std::uint64_t p = 0;
    std::uint64_t max_points = 5'000'000;
    GroebnerOptions groebner;
};

/// Advisory irreducibility test for V(gens) of known projective dimension.
/// A reducible witness is returned only when a generator g = a*b splits the
/// locus into V(I, a) and V(I, b) with neither contained in the other (checked
/// exactly by dimension). Otherwise random curve sections are counted and
/// compared with the window |N - q - 1| <= (D-1)(D-2) sqrt(q) of a single
/// geometrically irreducible component of degree D.
IrreducibilityResult irreducibility_advisory(const std::vector<Polynomial>& gens, long proj_dim,
                                             const IrreducibilityOptions& options, std::mt19937_64& rng);

}  // namespace ci2

#pragma once

#include "ci2/zerodim/groebner.hpp"

#include <string>
#include <vector>

namespace ci2 {

enum class DimensionStatus { Ok, Budget };

/// Leading-term data backing a dimension value.
struct DimensionCertificate {
    /// Minimal generators of the leading-term ideal, as text.
    std::vector<std::string> leading_monomials;
    /// A largest variable set independent modulo the leading-term ideal.
    std::vector<std::size_t> independent_set;
};

struct DimensionResult {
    DimensionStatus status = DimensionStatus::Ok;
    /// Dimension of the projective locus; -1 when it is empty.
    long proj_dim = -1;
    DimensionCertificate certificate;
    std::uint64_t reductions = 0;
    /// Budget messages and modular cross-check remarks.
    std::vector<std::string> notes;
};

/// Primes used to cross-check rational computations that ran past half their budget.
inline constexpr std::uint64_t kCrossCheckPrimes[] = {10007, 10009, 10037};

/// Projective dimension of V(I) in P^{n-1} for homogeneous generators in n
/// variables: the size of a largest variable set independent modulo the
/// leading-term ideal, minus one.
DimensionResult projective_dimension(const std::vector<Polynomial>& gens, const GroebnerOptions& options = {});

/// Largest size of a subset of {0..n-1} containing no support in `supports` (bitmasks).
std::size_t max_independent_set(std::size_t n, const std::vector<std::uint64_t>& supports,
                                 std::vector<std::size_t>* witness = nullptr);

struct RegularSequenceResult {
    DimensionStatus status = DimensionStatus::Ok;
    bool regular = false;
    long proj_dim = -1;
    long expected_dim = -1;
    std::vector<std::string> notes;
};

/// Homogeneous generators form a regular sequence on P^{ambient_proj_dim} iff
/// the locus has dimension ambient_proj_dim - #gens. The empty locus (-1) counts
/// only when #gens == ambient_proj_dim + 1.
RegularSequenceResult is_regular_sequence(const std::vector<Polynomial>& gens, long ambient_proj_dim,
                                          const GroebnerOptions& options = {});

/// Map rational generators into F_p; throws InputError if a denominator vanishes.
std::vector<Polynomial> reduce_mod_p(const std::vector<Polynomial>& gens, std::uint64_t p);

}  // namespace ci2

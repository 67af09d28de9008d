#pragma once

#include "ci2/poly/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ci2 {

struct GroebnerOptions {
    /// Elementary reduction steps allowed before giving up.
    std::uint64_t max_reductions = 200'000;
    /// Largest S-pair lcm degree allowed.
    unsigned max_degree = 40;
};

enum class GroebnerStatus { Complete, Budget };

struct GroebnerResult {
    GroebnerStatus status = GroebnerStatus::Complete;
    /// Reduced, monic, sorted by increasing leading monomial. Partial on Budget.
    std::vector<Polynomial> basis;
    std::uint64_t reductions = 0;
    std::string budget_note;
};

/// Reduced Groebner basis under degrevlex (Buchberger with the Gebauer-Moeller
/// pair criteria). Zero generators are ignored; all generators must share a ring.
GroebnerResult groebner_basis(const std::vector<Polynomial>& gens, const GroebnerOptions& options = {});

/// Fully reduced normal form of f modulo a list of monic polynomials.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

}  // namespace ci2

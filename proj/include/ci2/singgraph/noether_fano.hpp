#pragma once

#include "ci2/singgraph/graph.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ci2::singgraph {

struct NFInstance {
    ResolutionGraph graph;
    /// Multiplicities indexed by vertex; entry 0 is mu_0 for base-0 graphs
    /// and unused otherwise.
    std::vector<mpq_class> mu;
    mpq_class n;
    /// delta_i = codim(B_{i-1}) - 1 indexed by vertex (entry 0 unused); its
    /// presence selects the weighted inequality.
    std::optional<std::vector<mpq_class>> delta;
    std::optional<int> k;
    std::optional<int> L;

    const mpq_class& mu_at(int v) const { return mu.at(static_cast<std::size_t>(v)); }
};

/// Violated instance invariants; empty when the instance is usable.
std::vector<std::string> instance_violations(const NFInstance& inst);

struct NFResult {
    bool evaluated = false;
    bool holds = false;
    bool weighted = false;
    mpq_class lhs, rhs;
    std::vector<std::string> violations;
};

NFResult nf_log_inequality(const NFInstance& inst);

struct Prop52Result {
    int k = 0;
    mpz_class lhs, rhs;
    bool holds = false;
    bool equality = false;
};

/// (p_2 + ... + p_k)(sum_{i>k} p_i + 1) >= sum_{i>=2} p_i^2. Throws
/// InputError unless g is valid in `required`.
Prop52Result prop52_check(const ResolutionGraph& g, GraphClass required = GraphClass::Prefix);

}  // namespace ci2::singgraph

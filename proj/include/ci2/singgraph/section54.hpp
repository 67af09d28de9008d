#pragma once

#include "ci2/singgraph/noether_fano.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ci2::singgraph {

struct ChainCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct Section54Report {
    /// "case-1" when mu_1 > n, "consistent" or "inconsistent".
    std::string outcome;
    int k = 0, L = 0;
    std::vector<std::string> structural_violations;
    NFResult nf;
    std::vector<ChainCheck> checks;
    std::optional<mpq_class> chain_lhs, chain_rhs;
    /// 3n - mu_0, the bound for mult_W of the restricted divisor.
    mpq_class final_threshold;
    /// chain_lhs / sum_{i<=L} p_{L,i}; a lower bound for nu_{E,1} when the
    /// chain inequality holds.
    std::optional<mpq_class> nu_E1_lower;
    bool final_bound_applicable = false;
    bool final_bound_holds = false;
};

/// Structural and arithmetic consequences for a base-0 instance with
/// discrepancy data and the L/k split.
Section54Report section54_chain_check(const NFInstance& inst);

}  // namespace ci2::singgraph

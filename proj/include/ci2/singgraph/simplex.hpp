#pragma once

#include "ci2/singgraph/graph.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ci2::singgraph {

/// Variables t_2..t_N are stored at index i - 2.
struct SimplexVertex {
    int inactive = 0;  // the constraint lambda_inactive >= 0 left slack
    std::vector<mpq_class> t;
    mpq_class objective;
    bool feasible = false;
};

struct SimplexResult {
    int k = 0;
    bool trivial = false;  // k = N
    mpq_class min;
    std::vector<mpq_class> argmin;
    int argmin_inactive = 0;
    std::vector<SimplexVertex> vertices;
    std::vector<int> degenerate;  // inactive indices whose system was singular
    /// Vertex with lambda_2 = ... = lambda_{N-1} = 0 from the closed-form relation.
    std::optional<std::vector<mpq_class>> distinguished;
    mpq_class distinguished_value;
    bool distinguished_matches_enumeration = false;
    bool optimum_is_distinguished = false;
};

/// Minimises t_2 + ... + t_k over {lambda_i >= 0, i = 2..N} on the hyperplane
/// sum p_i t_i = sum_{i>k} p_i + 1 by exact vertex enumeration.
SimplexResult simplex_min(const ResolutionGraph& g, GraphClass required = GraphClass::Prefix);

/// lambda_i(t) = t_i - sum_{j -> i} t_j for i >= 2.
mpq_class simplex_constraint(const ResolutionGraph& g, int i, const std::vector<mpq_class>& t);

}  // namespace ci2::singgraph

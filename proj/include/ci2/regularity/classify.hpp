#pragma once

#include "ci2/exact/pencil.hpp"
#include "ci2/poly/point_context.hpp"

#include <string>

namespace ci2 {

enum class PointKind { Nonsingular, Quadratic, BiQuadratic };

std::string to_string(PointKind k);

/// The trichotomy of a point of {f1 = f2 = 0} by its linear parts.
struct PointClass {
    PointKind kind = PointKind::Nonsingular;
    /// Linear parts f_{1,1}, f_{2,1} as coefficient vectors in the chart.
    Vector xi1;
    Vector xi2;
    /// Quadratic case: f_{i,1} = alpha_i * tau with tau's first nonzero coefficient 1.
    Vector tau;
    Scalar alpha1;
    Scalar alpha2;
    /// Quadratic case: the hyperplane {tau = 0} and (alpha2 f_{1,2} - alpha1 f_{2,2}) restricted to it.
    LinearSubspace tau_hyperplane;
    QuadraticForm pencil_form;
    /// Quadratic forms f_{1,2}, f_{2,2} on the whole chart.
    QuadraticForm q1;
    QuadraticForm q2;
};

PointClass classify_point(const PointContext& ctx);

/// The rank that decides good / typed singularities: rank of pencil_form at a
/// quadratic point, the pencil minimum over the algebraic closure at a
/// bi-quadratic point, unused (0) at a nonsingular point.
std::size_t singularity_rank(const PointClass& cls);

/// Nonsingular -> true; quadratic -> rank(pencil_form) >= 5; bi-quadratic -> rk(f_{1,2}, f_{2,2}) >= 7.
bool check_good_singularity(const PointClass& cls);

struct SingularityTypeResult {
    bool holds = false;
    std::size_t rank = 0;
    /// codim(Sing) >= min(r1 - 1, r2 - 3).
    long codim_bound = 0;
};

/// Singularity of type (r1, r2). Throws InputError unless r2 >= r1 + 2.
SingularityTypeResult singularity_type(const PointClass& cls, std::size_t r1, std::size_t r2);

}  // namespace ci2

#pragma once

#include "ci2/exact/linear_subspace.hpp"
#include "ci2/exact/quadratic_form.hpp"
#include "ci2/poly/polynomial.hpp"

#include <array>
#include <utility>
#include <vector>

namespace ci2 {

/// Two homogeneous polynomials f1, f2 of degrees 2 <= d1 <= d2 in a common ring
/// of n variables, defining a codimension-two complete intersection in P^{n-1}.
struct PolyPair {
    Polynomial f1;
    Polynomial f2;
    unsigned d1 = 0;
    unsigned d2 = 0;

    /// Throws InputError on non-homogeneous input, mismatched rings or degrees
    /// outside 2 <= d1 <= d2.
    static PolyPair make(Polynomial f1, Polynomial f2);

    std::size_t n_vars() const noexcept { return f1.n_vars(); }
    Field field() const noexcept { return f1.field(); }
    /// Dimension of the intersection, n_vars - 3.
    long fibre_dim() const noexcept { return static_cast<long>(n_vars()) - 3; }
    /// n_vars == d1 + d2 + 1, i.e. fibre_dim == d1 + d2 - 2.
    bool is_standard() const noexcept { return n_vars() == d1 + d2 + 1; }
};

/// A pair expanded at a point o in the affine chart where the largest-index
/// nonzero coordinate of o equals 1. Affine coordinates z_0..z_{n-2} are the
/// remaining homogeneous coordinates in order, shifted so that o is the origin.
struct PointContext {
    PolyPair pair;
    Vector point;
    std::size_t chart = 0;
    /// components[i][j] is the degree-j part of f_{i+1} in the chart, j = 0..d_{i+1};
    /// zero components are kept.
    std::array<std::vector<Polynomial>, 2> components;

    std::size_t n_affine() const noexcept { return pair.n_vars() - 1; }
    Field field() const noexcept { return pair.field(); }
    /// f_{i,j} for i in {1, 2}.
    const Polynomial& f(int i, unsigned j) const;
    /// {f_{1,1} = f_{2,1} = 0} inside the chart.
    LinearSubspace tangent_space() const;
};

/// Throws InputError if the point is zero, has the wrong length or is not on both hypersurfaces.
PointContext localize_at_point(const PolyPair& pair, const Vector& point);

/// f_{i,1} + ... + f_{i,a}.
Polynomial hypertangent_segment(const PointContext& ctx, int i, unsigned a);

struct SequenceEntry {
    int i = 0;
    unsigned j = 0;
    Polynomial form;
};

/// Entries f_{i,j}, j >= 2, ordered by (j, i) and restricted to `ambient`.
struct HypertangentSequence {
    LinearSubspace ambient;
    std::vector<SequenceEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
    std::vector<Polynomial> forms() const;
};

/// Index pairs (i, j) of the full sequence in order: (1,2), (2,2), (1,3), (2,3), ...
std::vector<std::pair<int, unsigned>> sequence_order(unsigned d1, unsigned d2);

/// The sequence with its last `truncate` entries dropped, restricted to
/// {f_{1,1} = f_{2,1} = 0}.
HypertangentSequence build_sequence(const PointContext& ctx, std::size_t truncate = 0);
/// The same entries restricted to an arbitrary subspace of the chart.
HypertangentSequence restrict_sequence(const PointContext& ctx, std::size_t truncate, const LinearSubspace& subspace);

/// f(B y) in the coordinates of the subspace basis.
Polynomial restrict_to_subspace(const Polynomial& f, const LinearSubspace& subspace);

/// Gram matrix of a homogeneous quadratic (or zero) polynomial.
QuadraticForm quadratic_form_of(const Polynomial& q);
Polynomial polynomial_of(const QuadraticForm& q);

}  // namespace ci2

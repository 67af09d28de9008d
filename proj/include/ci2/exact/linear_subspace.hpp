#pragma once

#include "ci2/exact/matrix.hpp"

#include <random>

namespace ci2 {

/// A linear subspace L of K^n held both as a basis (the columns of an
/// n x dim parametrization) and as a full-rank system of cutting equations.
class LinearSubspace {
public:
    LinearSubspace() = default;

    /// Throws InputError if the vectors are dependent or of the wrong length.
    static LinearSubspace from_basis(Field field, std::size_t ambient_dim, const std::vector<Vector>& basis);
    /// Common kernel of the given linear forms (dependent forms are allowed).
    static LinearSubspace from_equations(Field field, std::size_t ambient_dim, const std::vector<Vector>& equations);
    static LinearSubspace whole(Field field, std::size_t ambient_dim);
    /// A uniformly random subspace of `parent` of codimension `codim` inside it.
    static LinearSubspace random_in(const LinearSubspace& parent, std::size_t codim, std::mt19937_64& rng);

    Field field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.cols(); }
    std::size_t codim() const noexcept { return ambient_ - dim(); }

    /// ambient_dim x dim; columns form a basis.
    const Matrix& parametrization() const noexcept { return basis_; }
    /// codim x ambient_dim; rows cut out the subspace.
    const Matrix& equations() const noexcept { return equations_; }
    std::vector<Vector> basis_vectors() const;

    bool contains(const Vector& v) const;
    bool contains(const LinearSubspace& other) const;

private:
    LinearSubspace(Field field, std::size_t ambient, Matrix basis);

    Field field_;
    std::size_t ambient_ = 0;
    Matrix basis_;
    Matrix equations_;
};

}  // namespace ci2

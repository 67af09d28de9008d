#include "ci2/exact/linear_subspace.hpp"

#include "ci2/error.hpp"

namespace ci2 {

LinearSubspace::LinearSubspace(Field field, std::size_t ambient, Matrix basis)
    : field_(field), ambient_(ambient), basis_(std::move(basis)) {
    const auto eqs = basis_.transpose().kernel_basis();
    equations_ = eqs.empty() ? Matrix(field_, 0, ambient_) : Matrix::from_rows(field_, eqs);
}

LinearSubspace LinearSubspace::from_basis(Field field, std::size_t ambient_dim, const std::vector<Vector>& basis) {
    for (const auto& v : basis)
        if (v.size() != ambient_dim) throw InputError("basis vector has the wrong length");
    Matrix b = basis.empty() ? Matrix(field, ambient_dim, 0) : Matrix::from_columns(field, basis);
    if (b.rank() != basis.size()) throw InputError("basis vectors are linearly dependent");
    return LinearSubspace(field, ambient_dim, std::move(b));
}

LinearSubspace LinearSubspace::from_equations(Field field, std::size_t ambient_dim,
                                              const std::vector<Vector>& equations) {
    for (const auto& v : equations)
        if (v.size() != ambient_dim) throw InputError("equation has the wrong length");
    if (equations.empty()) return whole(field, ambient_dim);
    return from_basis(field, ambient_dim, Matrix::from_rows(field, equations).kernel_basis());
}

LinearSubspace LinearSubspace::whole(Field field, std::size_t ambient_dim) {
    return LinearSubspace(field, ambient_dim, Matrix::identity(field, ambient_dim));
}

LinearSubspace LinearSubspace::random_in(const LinearSubspace& parent, std::size_t codim, std::mt19937_64& rng) {
    if (codim > parent.dim()) throw InputError("codimension exceeds the parent dimension");
    const std::size_t d = parent.dim() - codim;
    for (;;) {
        Matrix coords = random_matrix(parent.field(), parent.dim(), d, rng);
        if (coords.rank() != d) continue;
        Matrix b = parent.parametrization() * coords;
        return LinearSubspace(parent.field(), parent.ambient_dim(), std::move(b));
    }
}

std::vector<Vector> LinearSubspace::basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t c = 0; c < basis_.cols(); ++c) out.push_back(basis_.column(c));
    return out;
}

bool LinearSubspace::contains(const Vector& v) const {
    if (v.size() != ambient_) return false;
    for (const auto& s : equations_ * v)
        if (!s.is_zero()) return false;
    return true;
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
    if (other.ambient_ != ambient_) return false;
    return (equations_ * other.basis_).is_zero();
}

}  // namespace ci2

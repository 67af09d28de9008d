#include "ci2/exact/quadratic_form.hpp"

#include "ci2/error.hpp"

namespace ci2 {

QuadraticForm::QuadraticForm(Matrix gram) : gram_(std::move(gram)) {
    if (gram_.field().characteristic() == 2) throw InputError("quadratic forms need characteristic != 2");
    if (!gram_.is_symmetric()) throw InputError("Gram matrix is not symmetric");
}

QuadraticForm QuadraticForm::from_polynomial_coefficients(const Matrix& upper) {
    const Field f = upper.field();
    if (f.characteristic() == 2) throw InputError("quadratic forms need characteristic != 2");
    if (upper.rows() != upper.cols()) throw InputError("coefficient matrix is not square");
    const Scalar half = Scalar::one(f) / Scalar(f, 2L);
    Matrix g(f, upper.rows(), upper.cols());
    for (std::size_t i = 0; i < upper.rows(); ++i) {
        g(i, i) = upper(i, i);
        for (std::size_t j = i + 1; j < upper.cols(); ++j) {
            g(i, j) = upper(i, j) * half;
            g(j, i) = g(i, j);
        }
    }
    return QuadraticForm(std::move(g));
}

Scalar QuadraticForm::polynomial_coefficient(std::size_t i, std::size_t j) const {
    if (i == j) return gram_(i, i);
    return gram_(i, j) + gram_(j, i);
}

Scalar QuadraticForm::evaluate(const Vector& x) const {
    const Vector gx = gram_ * x;
    Scalar acc = Scalar::zero(field());
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * gx[i];
    return acc;
}

QuadraticForm congruent(const QuadraticForm& q, const Matrix& p) {
    if (p.rows() != q.n_vars()) throw InputError("congruence matrix has the wrong number of rows");
    return QuadraticForm(p.transpose() * q.gram() * p);
}

QuadraticForm restrict_form(const QuadraticForm& q, const LinearSubspace& subspace) {
    if (subspace.ambient_dim() != q.n_vars()) throw InputError("subspace and form live in different spaces");
    return congruent(q, subspace.parametrization());
}

}  // namespace ci2

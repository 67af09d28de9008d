#pragma once

#include "ci2/exact/linear_subspace.hpp"
#include "ci2/exact/matrix.hpp"

namespace ci2 {

/// Symmetric bilinear form over a field of characteristic != 2, identified
/// with the quadratic form x^T G x.
class QuadraticForm {
public:
    QuadraticForm() = default;
    /// Throws InputError for a non-symmetric matrix or characteristic 2.
    explicit QuadraticForm(Matrix gram);

    /// The form with polynomial coefficient c_ij on x_i x_j (i <= j).
    /// `upper` is n x n and only its upper triangle is read.
    static QuadraticForm from_polynomial_coefficients(const Matrix& upper);

    Field field() const noexcept { return gram_.field(); }
    std::size_t n_vars() const noexcept { return gram_.rows(); }
    const Matrix& gram() const noexcept { return gram_; }
    std::size_t rank() const { return gram_.rank(); }

    /// Coefficient of x_i x_j in the polynomial x^T G x, i <= j.
    Scalar polynomial_coefficient(std::size_t i, std::size_t j) const;
    Scalar evaluate(const Vector& x) const;

    QuadraticForm operator+(const QuadraticForm& o) const { return QuadraticForm(gram_ + o.gram_); }
    QuadraticForm scaled(const Scalar& s) const { return QuadraticForm(gram_.scaled(s)); }

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.gram_ == b.gram_; }

private:
    Matrix gram_;
};

/// The pullback P^T G P under x = P y.
QuadraticForm congruent(const QuadraticForm& q, const Matrix& p);

/// The form restricted to L, in the coordinates of L's basis.
QuadraticForm restrict_form(const QuadraticForm& q, const LinearSubspace& subspace);

}  // namespace ci2

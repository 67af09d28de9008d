#pragma once

#include "ci2/exact/scalar.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ci2 {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    /// All rows must have equal length and live in `field`.
    static Matrix from_rows(Field field, const std::vector<Vector>& rows);
    /// Columns given as vectors of equal length.
    static Matrix from_columns(Field field, const std::vector<Vector>& cols);

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    /// Exact rank: fraction-free Bareiss over Q, Gaussian elimination over F_p.
    std::size_t rank() const;
    /// Square matrices only.
    Scalar determinant() const;
    /// Basis of {v : A v = 0}, one vector per free column of the reduced echelon form.
    std::vector<Vector> kernel_basis() const;
    /// Reduced row echelon form with the pivot column of each nonzero row.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    /// Solve A x = b for square nonsingular A; nullopt when singular.
    std::optional<Vector> solve(const Vector& b) const;

    Matrix operator*(const Matrix& other) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Scalar& s) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Rows separated by newlines, entries by spaces.
    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Free-function spelling of Matrix::rank.
inline std::size_t matrix_rank(const Matrix& m) { return m.rank(); }

/// Uniform over F_p; small integers in [-9, 9] over Q.
Scalar random_scalar(Field field, std::mt19937_64& rng);
Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Matrix random_symmetric(Field field, std::size_t n, std::mt19937_64& rng);

}  // namespace ci2

#include "ci2/exact/matrix.hpp"

#include "ci2/error.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ci2 {

namespace {

std::size_t rank_mod_p(const Matrix& m) {
    const std::uint64_t p = m.field().characteristic();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).residue();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t k = c; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
        const std::uint64_t inv = inv_mod(a[rank * cols + c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t f = mul_mod(a[r * cols + c], inv, p);
            if (f == 0) continue;
            for (std::size_t k = c; k < cols; ++k) {
                const std::uint64_t t = mul_mod(f, a[rank * cols + k], p);
                std::uint64_t& x = a[r * cols + k];
                x = x >= t ? x - t : x + p - t;
            }
        }
        ++rank;
    }
    return rank;
}

// Fraction-free elimination on an integer matrix obtained by clearing row denominators.
std::size_t rank_bareiss(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            const mpq_class& q = m(r, c).rational();
            a[r * cols + c] = q.get_num() * (l / q.get_den());
        }
    }
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
        const mpz_class pivot = a[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const mpz_class f = a[r * cols + c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                mpz_class v = pivot * a[r * cols + k] - f * a[rank * cols + k];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[r * cols + k] = std::move(v);
            }
            a[r * cols + c] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!(rows[r][c].field() == field)) throw InputError("matrix entry in the wrong field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_columns(Field field, const std::vector<Vector>& cols) {
    return from_rows(field, cols).transpose();
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::size_t Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return field_.is_rational() ? rank_bareiss(*this) : rank_mod_p(*this);
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix a = *this;
    std::vector<std::size_t> piv_cols;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
        std::size_t piv = row;
        while (piv < rows_ && a(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(a(piv, k), a(row, k));
        const Scalar inv = a(row, c).inverse();
        for (std::size_t k = c; k < cols_; ++k) a(row, k) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || a(r, c).is_zero()) continue;
            const Scalar f = a(r, c);
            for (std::size_t k = c; k < cols_; ++k) a(r, k) -= f * a(row, k);
        }
        piv_cols.push_back(c);
        ++row;
    }
    if (pivots) *pivots = std::move(piv_cols);
    return a;
}

std::vector<Vector> Matrix::kernel_basis() const {
    std::vector<std::size_t> pivots;
    const Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols_, Scalar::zero(field_));
        v[free] = Scalar::one(field_);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    Matrix a = *this;
    Scalar det = Scalar::one(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t piv = c;
        while (piv < rows_ && a(piv, c).is_zero()) ++piv;
        if (piv == rows_) return Scalar::zero(field_);
        if (piv != c) {
            for (std::size_t k = 0; k < cols_; ++k) std::swap(a(piv, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        const Scalar inv = a(c, c).inverse();
        for (std::size_t r = c + 1; r < rows_; ++r) {
            if (a(r, c).is_zero()) continue;
            const Scalar f = a(r, c) * inv;
            for (std::size_t k = c; k < cols_; ++k) a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
    if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[r];
    }
    std::vector<std::size_t> pivots;
    const Matrix red = aug.rref(&pivots);
    if (pivots.size() != rows_ || pivots.back() != cols_ - 1) return std::nullopt;
    Vector x(cols_);
    for (std::size_t r = 0; r < rows_; ++r) x[r] = red(r, cols_);
    return x;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
        }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vector out(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + other.scaled(-Scalar::one(field_)); }

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << '\n';
    }
    return os.str();
}

Scalar random_scalar(Field field, std::mt19937_64& rng) {
    if (field.is_rational()) {
        std::uniform_int_distribution<long> d(-9, 9);
        return Scalar(field, d(rng));
    }
    std::uniform_int_distribution<std::uint64_t> d(0, field.characteristic() - 1);
    return Scalar::from_residue(field, d(rng));
}

Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(field, rng);
    return m;
}

Matrix random_symmetric(Field field, std::size_t n, std::mt19937_64& rng) {
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            m(r, c) = random_scalar(field, rng);
            m(c, r) = m(r, c);
        }
    return m;
}

}  // namespace ci2

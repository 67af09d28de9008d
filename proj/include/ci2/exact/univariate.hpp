#pragma once

#include "ci2/exact/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ci2 {

/// Dense univariate polynomial in one variable (written `t`), coefficients
/// stored from the constant term upward with no trailing zeros.
class UPoly {
public:
    explicit UPoly(Field field = Field::rationals()) : field_(field) {}
    UPoly(Field field, std::vector<Scalar> coeffs);

    static UPoly constant(const Scalar& c);
    /// a*t + b.
    static UPoly linear(const Scalar& a, const Scalar& b);

    Field field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Scalar coeff(std::size_t i) const;
    const Scalar& leading() const { return c_.back(); }

    UPoly monic() const;
    Scalar evaluate(const Scalar& t) const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    /// Quotient and remainder; throws std::domain_error on a zero divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
    UPoly operator%(const UPoly& divisor) const { return divmod(divisor).second; }
    /// Division known to be exact.
    UPoly exact_div(const UPoly& divisor) const;

    /// base^exp reduced modulo `mod`.
    static UPoly powmod(const UPoly& base, std::uint64_t exp, const UPoly& mod);

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<Scalar> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// Determinant of a square matrix with polynomial entries by fraction-free
/// elimination in K[t].
UPoly poly_determinant(std::vector<std::vector<UPoly>> m);

}  // namespace ci2

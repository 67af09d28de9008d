#pragma once

#include "ci2/exact/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ci2 {

inline constexpr std::size_t kMaxVars = 64;

using Exponents = std::vector<std::uint16_t>;

struct Term {
    Exponents exp;
    unsigned degree = 0;
    Scalar coeff;
};

/// Degree-reverse-lexicographic comparison with x0 > x1 > ... : negative if
/// a < b, zero if equal, positive if a > b.
int degrevlex_compare(const Exponents& a, unsigned deg_a, const Exponents& b, unsigned deg_b);

/// Sparse polynomial in n_vars <= 64 variables. Terms are kept sorted in
/// decreasing degrevlex order with nonzero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Field field, std::size_t n_vars);

    static Polynomial constant(Field field, std::size_t n_vars, const Scalar& c);
    static Polynomial variable(Field field, std::size_t n_vars, std::size_t index);
    static Polynomial monomial(Field field, const Exponents& exp, const Scalar& c);
    /// Linear form sum coeffs[i] * x_i.
    static Polynomial linear_form(Field field, const Vector& coeffs);

    Field field() const noexcept { return field_; }
    std::size_t n_vars() const noexcept { return n_vars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// -1 for the zero polynomial.
    int total_degree() const noexcept;
    /// Zero counts as homogeneous.
    bool is_homogeneous() const noexcept;
    Polynomial homogeneous_component(unsigned degree) const;
    /// Largest term in degrevlex; the polynomial must be nonzero.
    const Term& leading_term() const;
    Scalar coefficient(const Exponents& exp) const;
    /// Coefficient vector of a linear form; nonlinear terms are ignored.
    Vector linear_coefficients() const;

    Scalar evaluate(const Vector& point) const;
    /// Replace x_i by images[i]; all images share one ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    /// Restrict to the subspace x = B y, B of shape n_vars x m.
    Polynomial compose_linear(const Matrix& b) const;
    Polynomial pow(unsigned e) const;
    Polynomial monic() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& s) const;
    /// Multiply by c * x^exp.
    Polynomial times_term(const Exponents& exp, unsigned degree, const Scalar& c) const;
    /// this - c * x^exp * other, the basic reduction step.
    Polynomial minus_term_times(const Exponents& exp, unsigned degree, const Scalar& c, const Polynomial& other) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Canonical text: terms in decreasing degrevlex, e.g. "3*x0^2*x1 - 1/2*x2^3".
    std::string to_string() const;

    /// Build from unsorted terms; merges duplicates and drops zeros.
    static Polynomial from_terms(Field field, std::size_t n_vars, std::vector<Term> terms);
    /// Terms already strictly decreasing with nonzero coefficients.
    static Polynomial from_sorted_terms(Field field, std::size_t n_vars, std::vector<Term> terms);
    /// Remove the leading term (no-op on zero).
    void pop_leading();

private:
    void check_compatible(const Polynomial& o) const;

    Field field_;
    std::size_t n_vars_ = 0;
    std::vector<Term> terms_;
};

unsigned exponent_degree(const Exponents& e) noexcept;

}  // namespace ci2

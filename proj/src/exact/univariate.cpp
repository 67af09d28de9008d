#include "ci2/exact/univariate.hpp"

#include <sstream>
#include <stdexcept>

namespace ci2 {

UPoly::UPoly(Field field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::linear(const Scalar& a, const Scalar& b) { return UPoly(a.field(), {b, a}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    const Scalar inv = leading().inverse();
    UPoly r = *this;
    for (auto& x : r.c_) x *= inv;
    return r;
}

Scalar UPoly::evaluate(const Scalar& t) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(field_);
    UPoly r(field_);
    r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly rem = *this;
    UPoly quot(field_);
    if (rem.degree() < divisor.degree()) return {quot, rem};
    quot.c_.assign(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), Scalar::zero(field_));
    const Scalar inv = divisor.leading().inverse();
    const auto dd = static_cast<std::size_t>(divisor.degree());
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree()) - dd;
        const Scalar f = rem.leading() * inv;
        quot.c_[shift] = f;
        for (std::size_t i = 0; i <= dd; ++i) rem.c_[shift + i] -= f * divisor.c_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

UPoly UPoly::exact_div(const UPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

UPoly UPoly::powmod(const UPoly& base, std::uint64_t exp, const UPoly& mod) {
    UPoly result = UPoly::constant(Scalar::one(base.field())) % mod;
    UPoly b = base % mod;
    for (; exp; exp >>= 1) {
        if (exp & 1) result = (result * b) % mod;
        b = (b * b) % mod;
    }
    return result;
}

std::string UPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i];
        if (i >= 1) os << "*t";
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly poly_determinant(std::vector<std::vector<UPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
    const Field field = m[0][0].field();
    bool negate = false;
    UPoly prev = UPoly::constant(Scalar::one(field));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return UPoly(field);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
            }
            m[i][k] = UPoly(field);
        }
        prev = m[k][k];
    }
    UPoly det = m[n - 1][n - 1];
    if (negate) det = UPoly(field) - det;
    return det;
}

}  // namespace ci2

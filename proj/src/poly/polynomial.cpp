#include "ci2/poly/polynomial.hpp"

#include "ci2/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ci2 {

unsigned exponent_degree(const Exponents& e) noexcept {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

int degrevlex_compare(const Exponents& a, unsigned deg_a, const Exponents& b, unsigned deg_b) {
    if (deg_a != deg_b) return deg_a < deg_b ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return degrevlex_compare(a.exp, a.degree, b.exp, b.degree) > 0; }

}  // namespace

Polynomial::Polynomial(Field field, std::size_t n_vars) : field_(field), n_vars_(n_vars) {
    if (n_vars > kMaxVars) throw InputError("at most 64 variables are supported");
}

Polynomial Polynomial::from_terms(Field field, std::size_t n_vars, std::vector<Term> terms) {
    Polynomial p(field, n_vars);
    std::sort(terms.begin(), terms.end(), term_greater);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    return p;
}

Polynomial Polynomial::from_sorted_terms(Field field, std::size_t n_vars, std::vector<Term> terms) {
    Polynomial p(field, n_vars);
    p.terms_ = std::move(terms);
    return p;
}

void Polynomial::pop_leading() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
}

Polynomial Polynomial::constant(Field field, std::size_t n_vars, const Scalar& c) {
    Polynomial p(field, n_vars);
    if (!c.is_zero()) p.terms_.push_back({Exponents(n_vars, 0), 0, c});
    return p;
}

Polynomial Polynomial::variable(Field field, std::size_t n_vars, std::size_t index) {
    if (index >= n_vars) throw InputError("variable index out of range");
    Polynomial p(field, n_vars);
    Exponents e(n_vars, 0);
    e[index] = 1;
    p.terms_.push_back({std::move(e), 1, Scalar::one(field)});
    return p;
}

Polynomial Polynomial::monomial(Field field, const Exponents& exp, const Scalar& c) {
    Polynomial p(field, exp.size());
    if (!c.is_zero()) p.terms_.push_back({exp, exponent_degree(exp), c});
    return p;
}

Polynomial Polynomial::linear_form(Field field, const Vector& coeffs) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        terms.push_back({std::move(e), 1, coeffs[i]});
    }
    return from_terms(field, coeffs.size(), std::move(terms));
}

bool Polynomial::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].degree == 0); }

int Polynomial::total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().degree);
}

bool Polynomial::is_homogeneous() const noexcept {
    for (const auto& t : terms_)
        if (t.degree != terms_.front().degree) return false;
    return true;
}

Polynomial Polynomial::homogeneous_component(unsigned degree) const {
    Polynomial p(field_, n_vars_);
    for (const auto& t : terms_)
        if (t.degree == degree) p.terms_.push_back(t);
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
}

Scalar Polynomial::coefficient(const Exponents& exp) const {
    for (const auto& t : terms_)
        if (t.exp == exp) return t.coeff;
    return Scalar::zero(field_);
}

Vector Polynomial::linear_coefficients() const {
    Vector v(n_vars_, Scalar::zero(field_));
    for (const auto& t : terms_) {
        if (t.degree != 1) continue;
        for (std::size_t i = 0; i < n_vars_; ++i)
            if (t.exp[i] == 1) v[i] = t.coeff;
    }
    return v;
}

Scalar Polynomial::evaluate(const Vector& point) const {
    if (point.size() != n_vars_) throw InputError("point has the wrong number of coordinates");
    Scalar acc = Scalar::zero(field_);
    for (const auto& t : terms_) {
        Scalar m = t.coeff;
        for (std::size_t i = 0; i < n_vars_; ++i)
            for (unsigned k = 0; k < t.exp[i]; ++k) m *= point[i];
        acc += m;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != n_vars_) throw InputError("substitution needs one image per variable");
    if (images.empty()) return *this;
    const Field f = images.front().field();
    const std::size_t m = images.front().n_vars();
    // powers[i][k] = images[i]^k, grown on demand.
    std::vector<std::vector<Polynomial>> powers(n_vars_);
    auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(f, m, Scalar::one(f)));
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    Polynomial result(f, m);
    for (const auto& t : terms_) {
        Polynomial term = Polynomial::constant(f, m, t.coeff);
        for (std::size_t i = 0; i < n_vars_ && !term.is_zero(); ++i)
            if (t.exp[i]) term = term * power(i, t.exp[i]);
        result = result + term;
    }
    return result;
}

Polynomial Polynomial::compose_linear(const Matrix& b) const {
    if (b.rows() != n_vars_) throw InputError("restriction matrix has the wrong number of rows");
    std::vector<Polynomial> images;
    images.reserve(n_vars_);
    for (std::size_t i = 0; i < n_vars_; ++i) images.push_back(linear_form(b.field(), b.row(i)));
    if (images.empty()) return Polynomial(b.field(), b.cols());
    return substitute(images);
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(field_, n_vars_, Scalar::one(field_));
    Polynomial base = *this;
    for (; e; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(terms_.front().coeff.inverse());
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (n_vars_ != o.n_vars_) throw std::invalid_argument("polynomials in different rings");
    if (!(field_ == o.field_)) throw std::invalid_argument("polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(field_, n_vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size()) {
            r.terms_.push_back(terms_[i++]);
            continue;
        }
        if (i == terms_.size()) {
            r.terms_.push_back(o.terms_[j++]);
            continue;
        }
        const int c = degrevlex_compare(terms_[i].exp, terms_[i].degree, o.terms_[j].exp, o.terms_[j].degree);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].exp, terms_[i].degree, std::move(s)});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const { return scaled(-Scalar::one(field_)); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Scalar& s) const {
    Polynomial r(field_, n_vars_);
    if (s.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= s;
    return r;
}

Polynomial Polynomial::times_term(const Exponents& exp, unsigned degree, const Scalar& c) const {
    Polynomial r(field_, n_vars_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        for (std::size_t i = 0; i < n_vars_; ++i) t.exp[i] = static_cast<std::uint16_t>(t.exp[i] + exp[i]);
        t.degree += degree;
        t.coeff *= c;
    }
    return r;
}

Polynomial Polynomial::minus_term_times(const Exponents& exp, unsigned degree, const Scalar& c,
                                        const Polynomial& other) const {
    check_compatible(other);
    Polynomial r(field_, n_vars_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    const Scalar neg = -c;
    Term shifted;
    shifted.exp.resize(n_vars_);
    std::size_t i = 0, j = 0;
    auto load = [&](std::size_t k) {
        const Term& t = other.terms_[k];
        for (std::size_t v = 0; v < n_vars_; ++v) shifted.exp[v] = static_cast<std::uint16_t>(t.exp[v] + exp[v]);
        shifted.degree = t.degree + degree;
    };
    if (j < other.terms_.size()) load(j);
    while (i < terms_.size() || j < other.terms_.size()) {
        int cmp;
        if (j == other.terms_.size()) {
            cmp = 1;
        } else if (i == terms_.size()) {
            cmp = -1;
        } else {
            cmp = degrevlex_compare(terms_[i].exp, terms_[i].degree, shifted.exp, shifted.degree);
        }
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
            continue;
        }
        Scalar s = neg * other.terms_[j].coeff;
        if (cmp == 0) {
            s += terms_[i].coeff;
            ++i;
        }
        if (!s.is_zero()) r.terms_.push_back({shifted.exp, shifted.degree, std::move(s)});
        if (++j < other.terms_.size()) load(j);
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_, n_vars_);
    if (terms_.size() == 1) return o.times_term(terms_[0].exp, terms_[0].degree, terms_[0].coeff);
    if (o.terms_.size() == 1) return times_term(o.terms_[0].exp, o.terms_[0].degree, o.terms_[0].coeff);
    Polynomial acc(field_, n_vars_);
    const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& large = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& t : small.terms_) acc = acc + large.times_term(t.exp, t.degree, t.coeff);
    return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.n_vars_ != b.n_vars_ || !(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string coeff = t.coeff.to_string();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (coeff != "1" || t.degree == 0) {
            os << coeff;
            wrote = true;
        }
        for (std::size_t v = 0; v < n_vars_; ++v) {
            if (!t.exp[v]) continue;
            if (wrote) os << '*';
            os << 'x' << v;
            if (t.exp[v] > 1) os << '^' << t.exp[v];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace ci2

#include "ci2/poly/point_context.hpp"

#include "ci2/error.hpp"

namespace ci2 {

PolyPair PolyPair::make(Polynomial f1, Polynomial f2) {
    if (f1.n_vars() != f2.n_vars() || !(f1.field() == f2.field()))
        throw InputError("pair polynomials live in different rings");
    if (f1.is_zero() || f2.is_zero()) throw InputError("pair polynomials must be nonzero");
    if (!f1.is_homogeneous() || !f2.is_homogeneous()) throw InputError("pair polynomials must be homogeneous");
    PolyPair p;
    p.d1 = static_cast<unsigned>(f1.total_degree());
    p.d2 = static_cast<unsigned>(f2.total_degree());
    if (p.d1 < 2 || p.d1 > p.d2) throw InputError("pair degrees must satisfy 2 <= d1 <= d2");
    p.f1 = std::move(f1);
    p.f2 = std::move(f2);
    return p;
}

const Polynomial& PointContext::f(int i, unsigned j) const {
    if (i != 1 && i != 2) throw std::out_of_range("component index i must be 1 or 2");
    const auto& comps = components[static_cast<std::size_t>(i - 1)];
    if (j >= comps.size()) throw std::out_of_range("component degree beyond the polynomial degree");
    return comps[j];
}

LinearSubspace PointContext::tangent_space() const {
    return LinearSubspace::from_equations(field(), n_affine(),
                                          {f(1, 1).linear_coefficients(), f(2, 1).linear_coefficients()});
}

PointContext localize_at_point(const PolyPair& pair, const Vector& point) {
    const std::size_t n = pair.n_vars();
    const Field field = pair.field();
    if (point.size() != n) throw InputError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                            std::to_string(n));
    std::size_t chart = n;
    for (std::size_t k = n; k-- > 0;) {
        if (!(point[k].field() == field)) throw InputError("point coordinate in the wrong field");
        if (!point[k].is_zero()) {
            chart = k;
            break;
        }
    }
    if (chart == n) throw InputError("the zero vector is not a projective point");

    PointContext ctx;
    ctx.pair = pair;
    ctx.chart = chart;
    const Scalar inv = point[chart].inverse();
    for (const auto& c : point) ctx.point.push_back(c * inv);
    if (!pair.f1.evaluate(ctx.point).is_zero() || !pair.f2.evaluate(ctx.point).is_zero())
        throw InputError("point does not lie on both hypersurfaces");

    // x_k = o_k + z_{idx(k)} for k != chart, x_chart = 1.
    const std::size_t m = n - 1;
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t k = 0, z = 0; k < n; ++k) {
        if (k == chart) {
            images.push_back(Polynomial::constant(field, m, Scalar::one(field)));
        } else {
            images.push_back(Polynomial::variable(field, m, z++) + Polynomial::constant(field, m, ctx.point[k]));
        }
    }
    const Polynomial* fs[2] = {&pair.f1, &pair.f2};
    const unsigned ds[2] = {pair.d1, pair.d2};
    for (int i = 0; i < 2; ++i) {
        const Polynomial affine = fs[i]->substitute(images);
        for (unsigned j = 0; j <= ds[i]; ++j) ctx.components[static_cast<std::size_t>(i)].push_back(affine.homogeneous_component(j));
    }
    return ctx;
}

Polynomial hypertangent_segment(const PointContext& ctx, int i, unsigned a) {
    Polynomial acc(ctx.field(), ctx.n_affine());
    for (unsigned j = 1; j <= a; ++j) acc = acc + ctx.f(i, j);
    return acc;
}

std::vector<Polynomial> HypertangentSequence::forms() const {
    std::vector<Polynomial> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.form);
    return out;
}

std::vector<std::pair<int, unsigned>> sequence_order(unsigned d1, unsigned d2) {
    std::vector<std::pair<int, unsigned>> order;
    for (unsigned j = 2; j <= std::max(d1, d2); ++j) {
        if (j <= d1) order.emplace_back(1, j);
        if (j <= d2) order.emplace_back(2, j);
    }
    return order;
}

HypertangentSequence restrict_sequence(const PointContext& ctx, std::size_t truncate, const LinearSubspace& subspace) {
    if (subspace.ambient_dim() != ctx.n_affine()) throw InputError("subspace is not in the chart coordinates");
    const auto order = sequence_order(ctx.pair.d1, ctx.pair.d2);
    if (truncate > order.size()) throw InputError("truncation longer than the hypertangent sequence");
    HypertangentSequence seq;
    seq.ambient = subspace;
    for (std::size_t k = 0; k + truncate < order.size(); ++k) {
        const auto [i, j] = order[k];
        seq.entries.push_back({i, j, restrict_to_subspace(ctx.f(i, j), subspace)});
    }
    return seq;
}

HypertangentSequence build_sequence(const PointContext& ctx, std::size_t truncate) {
    return restrict_sequence(ctx, truncate, ctx.tangent_space());
}

Polynomial restrict_to_subspace(const Polynomial& f, const LinearSubspace& subspace) {
    if (f.n_vars() != subspace.ambient_dim()) throw InputError("polynomial and subspace have different ambient sizes");
    return f.compose_linear(subspace.parametrization());
}

QuadraticForm quadratic_form_of(const Polynomial& q) {
    const std::size_t n = q.n_vars();
    Matrix upper(q.field(), n, n);
    for (const auto& t : q.terms()) {
        if (t.degree != 2) throw InputError("not a quadratic form: " + q.to_string());
        std::size_t a = n, b = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (t.exp[v] == 2) a = b = v;
            if (t.exp[v] == 1) (a == n ? a : b) = v;
        }
        upper(a, b) = t.coeff;
    }
    return QuadraticForm::from_polynomial_coefficients(upper);
}

Polynomial polynomial_of(const QuadraticForm& q) {
    const std::size_t n = q.n_vars();
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Exponents e(n, 0);
            ++e[i];
            ++e[j];
            terms.push_back({std::move(e), 2, q.polynomial_coefficient(i, j)});
        }
    return Polynomial::from_terms(q.field(), n, std::move(terms));
}

}  // namespace ci2

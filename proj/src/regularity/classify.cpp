#include "ci2/regularity/classify.hpp"

#include "ci2/error.hpp"

namespace ci2 {

std::string to_string(PointKind k) {
    switch (k) {
        case PointKind::Nonsingular: return "nonsingular";
        case PointKind::Quadratic: return "quadratic";
        case PointKind::BiQuadratic: break;
    }
    return "bi-quadratic";
}

PointClass classify_point(const PointContext& ctx) {
    PointClass cls;
    const Field field = ctx.field();
    cls.xi1 = ctx.f(1, 1).linear_coefficients();
    cls.xi2 = ctx.f(2, 1).linear_coefficients();
    if (field.characteristic() != 2) {
        cls.q1 = quadratic_form_of(ctx.f(1, 2));
        cls.q2 = quadratic_form_of(ctx.f(2, 2));
    }
    const std::size_t r = Matrix::from_rows(field, {cls.xi1, cls.xi2}).rank();
    if (r == 2) {
        cls.kind = PointKind::Nonsingular;
        return cls;
    }
    if (r == 0) {
        cls.kind = PointKind::BiQuadratic;
        return cls;
    }
    cls.kind = PointKind::Quadratic;
    const Vector& nonzero = [&]() -> const Vector& {
        for (const auto& x : cls.xi1)
            if (!x.is_zero()) return cls.xi1;
        return cls.xi2;
    }();
    std::size_t lead = 0;
    while (nonzero[lead].is_zero()) ++lead;
    const Scalar scale = nonzero[lead];
    for (const auto& x : nonzero) cls.tau.push_back(x / scale);
    cls.alpha1 = cls.xi1[lead];
    cls.alpha2 = cls.xi2[lead];
    cls.tau_hyperplane = LinearSubspace::from_equations(field, ctx.n_affine(), {cls.tau});
    if (field.characteristic() == 2) throw InputError("pencil form needs characteristic != 2");
    const QuadraticForm combo = cls.q1.scaled(cls.alpha2) + cls.q2.scaled(-cls.alpha1);
    cls.pencil_form = restrict_form(combo, cls.tau_hyperplane);
    return cls;
}

std::size_t singularity_rank(const PointClass& cls) {
    switch (cls.kind) {
        case PointKind::Nonsingular: return 0;
        case PointKind::Quadratic: return cls.pencil_form.rank();
        case PointKind::BiQuadratic: break;
    }
    return pencil_min_rank(cls.q1, cls.q2, PencilSemantics::AlgebraicClosure);
}

SingularityTypeResult singularity_type(const PointClass& cls, std::size_t r1, std::size_t r2) {
    if (r2 < r1 + 2) throw InputError("singularity type needs r2 >= r1 + 2");
    SingularityTypeResult res;
    res.codim_bound = std::min(static_cast<long>(r1) - 1, static_cast<long>(r2) - 3);
    res.rank = singularity_rank(cls);
    switch (cls.kind) {
        case PointKind::Nonsingular: res.holds = true; break;
        case PointKind::Quadratic: res.holds = res.rank >= r1; break;
        case PointKind::BiQuadratic: res.holds = res.rank >= r2; break;
    }
    return res;
}

bool check_good_singularity(const PointClass& cls) {
    switch (cls.kind) {
        case PointKind::Nonsingular: return true;
        case PointKind::Quadratic: return cls.pencil_form.rank() >= 5;
        case PointKind::BiQuadratic: break;
    }
    return pencil_min_rank(cls.q1, cls.q2, PencilSemantics::AlgebraicClosure) >= 7;
}

}  // namespace ci2

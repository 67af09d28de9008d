#include "ci2/error.hpp"
#include "ci2/poly/parse.hpp"
#include "ci2/poly/point_context.hpp"

#include <doctest.h>

#include <random>

using namespace ci2;

namespace {

const Field F = Field::prime(32003);

PolyPair pair_of(const std::string& a, const std::string& b, std::size_t n) {
    return PolyPair::make(parse_polynomial(a, F, n), parse_polynomial(b, F, n));
}

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(F, x);
    return v;
}

// A pair of degrees (2, 3) in five variables through (1:1:1:1:2).
PolyPair sample_pair() {
    return pair_of("x0^2 + x1*x2 - x3^2 - 1/4*x4^2", "x0^3 - x1*x2*x3 + x0*x4^2 - 4*x3^3 + x2^2*x4 - x1*x3*x4", 5);
}

}  // namespace

TEST_CASE("pair validation") {
    CHECK_THROWS_AS(pair_of("x0^2 + x1", "x0^3", 3), InputError);
    CHECK_THROWS_AS(pair_of("x0^3", "x1^2", 3), InputError);
    CHECK_THROWS_AS(pair_of("x0", "x1^2", 3), InputError);
    const auto p = pair_of("x0^2", "x1^5", 8);
    CHECK(p.fibre_dim() == 5);
    CHECK(p.is_standard());
}

TEST_CASE("localization picks the largest-index nonzero chart") {
    const auto pair = sample_pair();
    const auto ctx = localize_at_point(pair, vec({1, 1, 1, 1, 2}));
    CHECK(ctx.chart == 4);
    CHECK(ctx.n_affine() == 4);
    CHECK(ctx.f(1, 0).is_zero());
    CHECK(ctx.f(2, 0).is_zero());
    CHECK_THROWS_AS(localize_at_point(pair, vec({1, 0, 0, 0, 0})), InputError);
    CHECK_THROWS_AS(localize_at_point(pair, vec({0, 0, 0, 0, 0})), InputError);
    CHECK_THROWS_AS(localize_at_point(pair, vec({1, 1, 1})), InputError);
}

TEST_CASE("components sum back to the dehomogenized polynomial") {
    const auto pair = sample_pair();
    const Vector o = vec({1, 1, 1, 1, 2});
    const auto ctx = localize_at_point(pair, o);
    // normalized point with x4 = 1
    Vector base;
    for (const auto& x : o) base.push_back(x / o[4]);
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        Vector z, x = base;
        for (std::size_t k = 0; k < 4; ++k) {
            z.push_back(Scalar::from_residue(F, rng() % 32003));
            x[k] += z[k];
        }
        for (int i = 1; i <= 2; ++i) {
            Scalar sum = Scalar::zero(F);
            const unsigned d = i == 1 ? pair.d1 : pair.d2;
            for (unsigned j = 0; j <= d; ++j) sum += ctx.f(i, j).evaluate(z);
            CHECK(sum == (i == 1 ? pair.f1 : pair.f2).evaluate(x));
        }
    }
}

TEST_CASE("hypertangent sequence length") {
    for (unsigned d1 = 2; d1 <= 5; ++d1)
        for (unsigned d2 = d1; d2 <= 7; ++d2) CHECK(sequence_order(d1, d2).size() == d1 + d2 - 2);
    CHECK(sequence_order(2, 4) == std::vector<std::pair<int, unsigned>>{{1, 2}, {2, 2}, {2, 3}, {2, 4}});

    const auto ctx = localize_at_point(sample_pair(), vec({1, 1, 1, 1, 2}));
    const long M = 3;  // d1 + d2 - 2
    for (std::size_t k = 0; k <= 3; ++k) CHECK(build_sequence(ctx, k).size() == static_cast<std::size_t>(M) - k);
    const auto s = build_sequence(ctx, 0);
    CHECK(s.entries[0].i == 1);
    CHECK(s.entries[1].i == 2);
    CHECK(s.entries[2].j == 3);
    CHECK(s.ambient.dim() == ctx.tangent_space().dim());
}

TEST_CASE("restriction is functorial") {
    const auto ctx = localize_at_point(sample_pair(), vec({1, 1, 1, 1, 2}));
    std::mt19937_64 rng(42);
    const auto whole = LinearSubspace::whole(F, 4);
    for (int t = 0; t < 20; ++t) {
        const auto l1 = LinearSubspace::random_in(whole, 1, rng);
        const auto l2 = LinearSubspace::random_in(l1, 1, rng);
        // coordinates of l2's basis inside l1
        std::vector<Vector> inner;
        for (const auto& v : l2.basis_vectors()) {
            const auto b = l1.parametrization();
            Matrix sys(F, b.cols(), b.cols());
            Vector rhs(b.cols(), Scalar::zero(F));
            const Matrix bt = b.transpose();
            const Matrix gram = bt * b;
            const auto c = gram.solve(bt * v);
            REQUIRE(c);
            inner.push_back(*c);
        }
        const auto l2_in_l1 = LinearSubspace::from_basis(F, l1.dim(), inner);
        const auto& f = ctx.f(2, 3);
        CHECK(restrict_to_subspace(restrict_to_subspace(f, l1), l2_in_l1) == restrict_to_subspace(f, l2));
    }
}

TEST_CASE("quadratic form round trip") {
    const auto q = parse_polynomial("x0^2 + 3*x0*x1 - x2^2", Field::rationals(), 3);
    const auto form = quadratic_form_of(q);
    CHECK(form.rank() == 3);
    CHECK(polynomial_of(form) == q);
    CHECK_THROWS_AS(quadratic_form_of(parse_polynomial("x0^3", Field::rationals(), 3)), InputError);
}

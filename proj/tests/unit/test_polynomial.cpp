#include "ci2/error.hpp"
#include "ci2/poly/parse.hpp"
#include "ci2/poly/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace ci2;

namespace {

Polynomial P(const std::string& s, Field f = Field::rationals(), std::size_t n = 3) {
    return parse_polynomial(s, f, n);
}

Polynomial random_poly(Field f, std::size_t n, std::mt19937_64& rng) {
    std::vector<Term> terms;
    for (int t = 0; t < 4; ++t) {
        Exponents e(n, 0);
        unsigned d = 0;
        for (auto& x : e) d += (x = static_cast<std::uint16_t>(rng() % 3));
        terms.push_back({e, d, Scalar(f, static_cast<long>(rng() % 7) - 3)});
    }
    return Polynomial::from_terms(f, n, terms);
}

}  // namespace

TEST_CASE("parse and print round trip") {
    const Field q = Field::rationals();
    const auto f = parse_polynomial("3*x0^2*x1 - 1/2*x2^3 + x1", q);
    CHECK(f.n_vars() == 3);
    CHECK(f.to_string() == "3*x0^2*x1 - 1/2*x2^3 + x1");
    CHECK(parse_polynomial(f.to_string(), q) == f);
    CHECK(parse_polynomial("-x0 + x0", q).is_zero());
    CHECK(parse_polynomial("2", q, 4).is_constant());
    CHECK(count_variables("x3*x11 + 1") == 12);
    const Field f7 = Field::prime(7);
    CHECK(parse_polynomial("8*x0", f7).to_string() == "x0");
}

TEST_CASE("parse errors carry line and column") {
    const Field q = Field::rationals();
    try {
        (void)parse_polynomial("x0 + * x1", q, std::nullopt, 4);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_polynomial("x0^", q), ParseError);
    CHECK_THROWS_AS(parse_polynomial("y1", q), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x5", q, 3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x64", q), InputError);
    CHECK_THROWS_AS(parse_polynomial("1/0*x0", q), InputError);
}

TEST_CASE("degree reverse lexicographic order") {
    // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
    const auto f = P("x2^2 + x1*x2 + x0*x2 + x1^2 + x0*x1 + x0^2");
    std::vector<std::string> order;
    for (const auto& t : f.terms())
        order.push_back(Polynomial::from_sorted_terms(f.field(), 3, {t}).to_string());
    CHECK(order == std::vector<std::string>{"x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"});
    CHECK(P("x0 + x1^2").leading_term().degree == 2);
}

TEST_CASE("ring arithmetic") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        const Field f = t % 2 ? Field::rationals() : Field::prime(11);
        const auto a = random_poly(f, 3, rng), b = random_poly(f, 3, rng), c = random_poly(f, 3, rng);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK((a + b).pow(2) == a * a + a * b.scaled(Scalar(f, 2L)) + b * b);
        Vector pt{Scalar(f, 2L), Scalar(f, -1L), Scalar(f, 3L)};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST_CASE("homogeneity, components and substitution") {
    const auto f = P("x0^3 + x0*x1 + x2 + 5");
    CHECK_FALSE(f.is_homogeneous());
    CHECK(f.total_degree() == 3);
    CHECK(f.homogeneous_component(2) == P("x0*x1"));
    CHECK(f.homogeneous_component(0) == P("5"));
    CHECK(P("x0^2 - x1*x2").is_homogeneous());
    const Field q = Field::rationals();
    // x0 -> x1 + x2, x1 -> x1, x2 -> x2
    const auto g = P("x0^2").substitute({P("x1 + x2"), P("x1"), P("x2")});
    CHECK(g == P("x1^2 + 2*x1*x2 + x2^2"));
    CHECK(P("2*x0 - x2").linear_coefficients() == Vector{Scalar(q, 2L), Scalar(q, 0L), Scalar(q, -1L)});
    CHECK_THROWS_AS(P("x0") + parse_polynomial("x0", Field::prime(5), 3), std::invalid_argument);
}

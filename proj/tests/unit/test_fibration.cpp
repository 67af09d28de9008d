#include "ci2/error.hpp"
#include "ci2/fibration/fibration.hpp"

#include <doctest.h>

#include <random>

using namespace ci2;
using namespace ci2::fibration;

namespace {

BigradedClass random_class(unsigned m, unsigned top, std::mt19937_64& rng) {
    BigradedClass c(m, top);
    for (int t = 0; t < 4; ++t)
        c.add_term(static_cast<unsigned>(rng() % (m + 2)), static_cast<unsigned>(rng() % (top + 2)),
                   static_cast<std::int64_t>(rng() % 11) - 5);
    return c;
}

BigradedClass linear(unsigned m, unsigned top, std::int64_t s, std::int64_t p) {
    return BigradedClass::monomial(m, top, 1, 0, s) + BigradedClass::monomial(m, top, 0, 1, p);
}

// Intersection number from the ring with the factors of [V] in the given order.
std::int64_t ring_number(unsigned m, long M, unsigned la, unsigned da, unsigned lb, unsigned db) {
    const unsigned top = static_cast<unsigned>(M + 2);
    const auto v = linear(m, top, la, da) * linear(m, top, lb, db);
    const auto k = linear(m, top, static_cast<std::int64_t>(m) + 1 - la - lb, 1);
    return (v * BigradedClass::monomial(m, top, m - 1, static_cast<unsigned>(M)) * k).degree();
}

}  // namespace

TEST_CASE("bigraded ring laws") {
    std::mt19937_64 rng(91);
    for (int t = 0; t < 200; ++t) {
        const unsigned m = 1 + rng() % 4, top = 2 + rng() % 6;
        const auto a = random_class(m, top, rng), b = random_class(m, top, rng), c = random_class(m, top, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * BigradedClass::monomial(m, top, m + 1, 0)).is_zero());
        CHECK((a * BigradedClass::monomial(m, top, 0, top + 1)).is_zero());
        CHECK(a.pow(2) == a * a);
    }
    CHECK(BigradedClass::monomial(2, 3, 2, 3, 7).degree() == 7);
    CHECK(BigradedClass::monomial(2, 3, 3, 0).is_zero());
    CHECK_THROWS(BigradedClass(2, 3) * BigradedClass(3, 3));
}

TEST_CASE("anticanonical class") {
    auto spec = [](unsigned m, unsigned l1, unsigned l2) {
        FibrationSpec s;
        s.m = m, s.d1 = 4, s.d2 = 27, s.l1 = l1, s.l2 = l2;
        return s;
    };
    const auto a = anticanonical_class(spec(1, 1, 1));
    CHECK(a.coefficient(1, 0) == 0);
    CHECK(a.coefficient(0, 1) == 1);
    const auto b = anticanonical_class(spec(3, 1, 1));
    CHECK(b.coefficient(1, 0) == 2);
    CHECK(b.coefficient(0, 1) == 1);
    CHECK(anticanonical_class(spec(4, 2, 3)).coefficient(1, 0) == 0);
}

TEST_CASE("intersection number and criterion") {
    FibrationSpec s;
    s.m = 1, s.d1 = 4, s.d2 = 27, s.l1 = 2, s.l2 = 1;
    CHECK(intersection_criterion(s).number == -50);
    CHECK(intersection_criterion(s).satisfied);
    const auto r = superrigidity_criterion(s);
    CHECK(r.lhs == mpq_class(133, 54));
    CHECK(r.category == Category::Superrigid);
    CHECK(r.equivalence_holds);

    s.m = 3, s.l1 = 1, s.l2 = 1;
    CHECK(intersection_criterion(s).number == 247);  // 108 * 2 + 27 + 4
    const auto r3 = superrigidity_criterion(s);
    CHECK(r3.lhs == mpq_class(185, 108));
    CHECK_FALSE(r3.main_inequality);
    CHECK(r3.category == Category::NonRigid);

    s.l1 = s.l2 = 0;
    CHECK(intersection_criterion(s).number == 4 * 27 * 4);
    CHECK_FALSE(intersection_criterion(s).satisfied);

    FibrationSpec bad;
    bad.d1 = 5, bad.d2 = 4;
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad.d1 = 1;
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("ring, closed form and rational criterion agree on a small grid") {
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned d1 = 2; d1 <= 7; ++d1)
            for (unsigned d2 = d1; d2 <= 7; ++d2)
                for (unsigned l1 = 0; l1 <= 6; ++l1)
                    for (unsigned l2 = 0; l2 <= 6; ++l2) {
                        FibrationSpec s;
                        s.m = m, s.d1 = d1, s.d2 = d2, s.l1 = l1, s.l2 = l2;
                        const long M = s.M();
                        const std::int64_t expanded = static_cast<std::int64_t>(d1) * d2 *
                                                          (static_cast<std::int64_t>(m) + 1 - l1 - l2) +
                                                      static_cast<std::int64_t>(l1) * d2 + static_cast<std::int64_t>(l2) * d1;
                        const auto num = intersection_criterion(s).number;
                        CHECK(num == expanded);
                        CHECK(num == intersection_closed_form(s));
                        CHECK(num == ring_number(m, M, l1, d1, l2, d2));
                        CHECK(num == ring_number(m, M, l2, d2, l1, d1));
                        const auto r = superrigidity_criterion(s);
                        CHECK(r.main_inequality == (num <= 0));
                        CHECK(r.equivalence_holds);
                        CHECK(r.non_rigid == (l1 + l2 <= m));
                    }
}

TEST_CASE("grid sweep") {
    GridRange g;
    g.m_max = 3, g.l_max = 5, g.d_max = 8;
    const auto a = grid_sweep(g, 1), b = grid_sweep(g, 4);
    CHECK(a.cases == 3ULL * 36 * 28);
    CHECK(a.discrepancies == 0);
    CHECK(a.superrigid + a.iii_only + a.k_only + a.non_rigid == a.cases);
    CHECK(b.cases == a.cases);
    CHECK(b.superrigid == a.superrigid);
    CHECK(b.non_rigid == a.non_rigid);
    CHECK(to_string(Category::Superrigid) != to_string(Category::NonRigid));
}

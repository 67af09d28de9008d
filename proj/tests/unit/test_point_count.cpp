#include "support/oracles.hpp"

#include "ci2/error.hpp"
#include "ci2/poly/parse.hpp"
#include "ci2/zerodim/galois_field.hpp"
#include "ci2/zerodim/point_count.hpp"

#include <doctest.h>

#include <random>

using namespace ci2;

namespace {

std::vector<Polynomial> gens(const std::vector<std::string>& src, Field f, std::size_t n) {
    std::vector<Polynomial> out;
    for (const auto& s : src) out.push_back(parse_polynomial(s, f, n));
    return out;
}

// Projective points over F_p by enumerating normalized representatives.
std::uint64_t brute_count(const std::vector<Polynomial>& g, std::uint64_t p, std::size_t n) {
    const Field f = Field::prime(p);
    std::uint64_t count = 0;
    for (std::size_t lead = 0; lead < n; ++lead) {
        const std::size_t free = n - lead - 1;
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < free; ++k) total *= p;
        for (std::uint64_t code = 0; code < total; ++code) {
            Vector x(n, Scalar::zero(f));
            x[lead] = Scalar::one(f);
            std::uint64_t c = code;
            for (std::size_t k = lead + 1; k < n; ++k, c /= p) x[k] = Scalar::from_residue(f, c % p);
            bool zero = true;
            for (const auto& h : g) zero = zero && h.evaluate(x).is_zero();
            count += zero;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("Galois field axioms") {
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 5}, {3, 3}, {7, 2}, {101, 1}}) {
        const GaloisField k(p, e);
        CHECK(k.size() == oracle::powm(p, e, 1ULL << 40));
        std::mt19937_64 rng(61 + p);
        for (int t = 0; t < 300; ++t) {
            const auto a = static_cast<std::uint32_t>(rng() % k.size()), b = static_cast<std::uint32_t>(rng() % k.size()),
                       c = static_cast<std::uint32_t>(rng() % k.size());
            CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
            CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
            CHECK(k.add(a, k.neg(a)) == 0);
            if (a != 0) CHECK(k.mul(a, k.inv(a)) == 1);
            // Frobenius is additive
            std::uint32_t ap = 1, bp = 1, sp = 1;
            for (std::uint64_t i = 0; i < p; ++i) ap = k.mul(ap, a), bp = k.mul(bp, b), sp = k.mul(sp, k.add(a, b));
            CHECK(sp == k.add(ap, bp));
        }
        // the prime subfield is {0..p-1} with ordinary arithmetic
        CHECK(k.mul(p - 1, p - 1) == 1);
    }
}

TEST_CASE("point counts of simple varieties") {
    const Field f = Field::prime(5);
    for (unsigned e = 1; e <= 3; ++e) {
        const GaloisField k(5, e);
        const std::uint64_t q = k.size();
        CHECK(count_projective_points({Polynomial(f, 3)}, k) == 1 + q + q * q);
        CHECK(count_projective_points(gens({"x0^2 + x1^2 - x2^2"}, f, 3), k) == q + 1);
        CHECK(count_projective_points(gens({"x0*x1"}, f, 3), k) == 2 * q + 1);
        CHECK(count_projective_points(gens({"x0", "x1", "x2"}, f, 3), k) == 0);
    }
    CHECK_THROWS_AS(count_projective_points({Polynomial(f, 3)}, GaloisField(5, 3), 10), BudgetExceeded);
}

TEST_CASE("point counts against brute force") {
    std::mt19937_64 rng(62);
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        const Field f = Field::prime(p);
        const GaloisField k(p, 1);
        for (int t = 0; t < 15; ++t) {
            std::vector<Polynomial> g;
            for (int m = 0; m < 2; ++m) {
                std::vector<Term> terms;
                const unsigned d = 1 + rng() % 3;
                for (int s = 0; s < 3; ++s) {
                    Exponents ex(4, 0);
                    for (unsigned i = 0; i < d; ++i) ++ex[rng() % 4];
                    terms.push_back({ex, d, Scalar(f, static_cast<long>(rng() % p))});
                }
                g.push_back(Polynomial::from_terms(f, 4, terms));
            }
            CHECK(count_projective_points(g, k) == brute_count(g, p, 4));
        }
    }
}

TEST_CASE("dimension by point count on linear unions") {
    const Field q = Field::rationals();
    const auto r = dimension_by_point_count(gens({"x0*x1", "x0*x2"}, q, 4), 7, 2);
    CHECK(r.counts.size() == 2);
    CHECK(r.counts[0] == 1 + 7 + 49 + 7);
    CHECK(r.dimension_estimate == 2);
    CHECK(dimension_by_point_count(gens({"x0", "x1", "x2"}, q, 4), 5, 2).dimension_estimate == 0);
    CHECK(dimension_by_point_count(gens({"x0", "x1"}, q, 2), 5, 1).dimension_estimate == -1);
}

TEST_CASE("irreducibility advisory") {
    const Field f = Field::prime(101);
    std::mt19937_64 rng(63);
    IrreducibilityOptions opt;
    opt.p = 13;
    const auto split = irreducibility_advisory(gens({"x0*x1"}, f, 3), 1, opt, rng);
    CHECK(split.verdict == IrreducibilityVerdict::ReducibleWitness);
    const auto conic = irreducibility_advisory(gens({"x0^2 + x1^2 - x2^2"}, f, 3), 1, opt, rng);
    INFO(conic.reason);
    CHECK(conic.verdict == IrreducibilityVerdict::LikelyIrreducible);
    CHECK(to_string(IrreducibilityVerdict::Inconclusive).size() > 0);
}

// Acceptance suite: one PASS/FAIL line per criterion.

#include "support/oracles.hpp"

#include "ci2/bounds/codim.hpp"
#include "ci2/bounds/local.hpp"
#include "ci2/cli/commands.hpp"
#include "ci2/cli/io.hpp"
#include "ci2/exact/pencil.hpp"
#include "ci2/fibration/fibration.hpp"
#include "ci2/poly/parse.hpp"
#include "ci2/regularity/classify.hpp"
#include "ci2/singgraph/noether_fano.hpp"
#include "ci2/singgraph/simplex.hpp"
#include "ci2/zerodim/dimension.hpp"
#include "ci2/zerodim/point_count.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#ifndef CI2_TEST_DATA
#error "CI2_TEST_DATA must point at tests/data"
#endif

using namespace ci2;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

QuadraticForm form_from_mod(const oracle::ModMatrix& g, Field f) {
    const std::size_t n = g.size();
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::from_residue(f, g[i][j]);
    return QuadraticForm(m);
}

oracle::ModMatrix random_sym_mod(std::size_t n, std::uint64_t p, std::mt19937_64& rng) {
    oracle::ModMatrix g(n, std::vector<std::uint64_t>(n));
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = d(rng);
    return g;
}

// P^T diag(d) P over F_p.
oracle::ModMatrix congruent_diag(const oracle::ModMatrix& P, const std::vector<std::uint64_t>& d, std::uint64_t p) {
    const std::size_t n = P.size();
    oracle::ModMatrix g(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < n; ++k) s = (s + oracle::mulm(oracle::mulm(P[k][i], d[k], p), P[k][j], p)) % p;
            g[i][j] = s;
        }
    return g;
}

// Pencil minimum rank against enumeration over P^1(F_p).
Outcome criterion1() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1);
    std::size_t mismatches = 0, cases = 0, below_generic = 0;
    for (int c = 0; c < 300; ++c) {
        const std::uint64_t p = c % 2 ? 32003 : 101;
        const Field f = Field::prime(p);
        const std::size_t n = 1 + rng() % 8;
        oracle::ModMatrix g1, g2;
        switch (c % 3) {
            case 0:
                g1 = random_sym_mod(n, p, rng);
                g2 = random_sym_mod(n, p, rng);
                break;
            case 1: {
                // simultaneously diagonal with repeated ratios and zeros
                const auto P = random_sym_mod(n, p, rng);
                std::vector<std::uint64_t> a(n), b(n);
                for (std::size_t i = 0; i < n; ++i) {
                    a[i] = rng() % 3 == 0 ? 0 : 1 + rng() % (p - 1);
                    b[i] = oracle::mulm(a[i], 1 + rng() % 3, p);
                    if (a[i] == 0) b[i] = rng() % 2 ? 0 : 1 + rng() % (p - 1);
                }
                g1 = congruent_diag(P, a, p);
                g2 = congruent_diag(P, b, p);
                break;
            }
            default: {
                // low-rank members
                const auto P = random_sym_mod(n, p, rng);
                std::vector<std::uint64_t> a(n, 0), b(n, 0);
                for (std::size_t i = 0; i < n; ++i) {
                    if (rng() % 2) a[i] = 1 + rng() % (p - 1);
                    if (rng() % 2) b[i] = 1 + rng() % (p - 1);
                }
                g1 = congruent_diag(P, a, p);
                g2 = congruent_diag(random_sym_mod(n, p, rng), b, p);
                break;
            }
        }
        const std::size_t expected = oracle::pencil_min_rank_enum(g1, g2, p);
        const std::size_t got = pencil_min_rank(form_from_mod(g1, f), form_from_mod(g2, f));
        ++cases;
        if (got != expected) ++mismatches;
        if (expected + 1 < n) ++below_generic;
    }
    const double secs = seconds_since(t0);
    return {mismatches == 0 && secs < 30,
            std::to_string(cases) + " pairs, " + std::to_string(mismatches) + " mismatches, " +
                std::to_string(below_generic) + " with rank drop >= 2, " + fmt_seconds(secs)};
}

// Rank drop under restriction to a hyperplane.
Outcome criterion2() {
    std::mt19937_64 rng(2);
    std::size_t bad = 0;
    std::array<std::size_t, 3> hist{};
    for (int c = 0; c < 500; ++c) {
        const Field f = c % 2 ? Field::prime(101) : Field::rationals();
        const std::size_t n = 2 + rng() % 9;
        Matrix g = random_symmetric(f, n, rng);
        if (c % 4 == 1) {
            // force a kernel: congruent to a diagonal with zeros
            Matrix d(f, n, n);
            for (std::size_t i = 0; i < n; ++i) d(i, i) = rng() % 2 ? random_scalar(f, rng) : Scalar::zero(f);
            const Matrix P = random_matrix(f, n, n, rng);
            g = P.transpose() * d * P;
        }
        const QuadraticForm q(g);
        Vector eq(n, Scalar::zero(f));
        if (c % 5 == 2) {
            eq[rng() % n] = Scalar::one(f);
        } else {
            for (auto& x : eq) x = random_scalar(f, rng);
            if (std::all_of(eq.begin(), eq.end(), [](const Scalar& s) { return s.is_zero(); })) eq[0] = Scalar::one(f);
        }
        const auto h = LinearSubspace::from_equations(f, n, {eq});
        const std::size_t before = q.rank(), after = restrict_form(q, h).rank();
        const long drop = static_cast<long>(before) - static_cast<long>(after);
        if (drop < 0 || drop > 2) ++bad;
        else ++hist[static_cast<std::size_t>(drop)];
    }
    return {bad == 0, "500 cases, drops 0/1/2 = " + std::to_string(hist[0]) + "/" + std::to_string(hist[1]) + "/" +
                          std::to_string(hist[2]) + ", " + std::to_string(bad) + " outside {0,1,2}"};
}

oracle::Big big(const mpz_class& z) { return oracle::Big(z.get_str()); }

// Closed-form table against independent big-integer evaluation.
Outcome criterion3() {
    std::size_t checked = 0, bad = 0;
    auto expect = [&](const mpz_class& got, const oracle::Big& want) {
        ++checked;
        if (big(got) != want) ++bad;
    };
    for (long M = 27; M <= 60; ++M) {
        expect(bounds::theorem02_bound(M, 2).value, oracle::half_poly(M, -17, 64));
        expect(bounds::theorem02_bound(M, 5).value, oracle::half_poly(M, -17, 64));
        expect(bounds::theorem02_bound(M, 3).value, oracle::half_poly(M, -19, 82));
        const auto c = bounds::condition_codims(M);
        expect(c.nonsingular, oracle::half_poly(M, -9, 14));
        expect(c.b22_1, oracle::Big(M - 9) * (M - 10) / 2 - 1 + 2 * (M + 2));
        expect(c.b22_2, oracle::half_poly(M, -15, 66));
        expect(c.b22_3, oracle::half_poly(M, -5, 16));
        expect(c.b22_2_d1_3, oracle::half_poly(M, -17, 82));
        expect(bounds::theorem21_bound(M - 1, 4), oracle::half_poly(M, -15, 58));
        expect(bounds::theorem21_bound(M - 1, 5), oracle::half_poly(M, -17, 74));
        for (long N = M; N <= M + 1; ++N)
            for (long r = 0; r <= N; ++r)
                expect(bounds::rank_stratum_codim(N, r), oracle::Big(N - r) * (N - r + 1) / 2);
    }
    const bool spots = bounds::theorem02_bound(27, 2).value == 167 && bounds::theorem02_bound(27, 3).value == 149 &&
                       bounds::theorem21_bound(20, 4) == 92;
    return {bad == 0 && spots, std::to_string(checked) + " values for M in [27, 60], " + std::to_string(bad) +
                                   " mismatches; spot values 167/149/92 " + (spots ? "match" : "DIFFER")};
}

// Projection-method minimum equals (M-2 choose 2).
Outcome criterion4() {
    const auto t0 = Clock::now();
    std::size_t cases = 0, bad = 0;
    for (unsigned d2 = 27; d2 <= 60; ++d2)
        for (unsigned d1 = 2; d1 <= d2 && d1 + d2 - 2 <= 60; ++d1) {
            const auto pm = bounds::projection_minimum(d1, d2);
            const long M = static_cast<long>(d1 + d2) - 2;
            ++cases;
            if (big(pm.value) != oracle::Big(M - 2) * (M - 3) / 2) ++bad;
        }
    const double secs = seconds_since(t0);
    return {bad == 0 && cases > 0 && secs < 5,
            std::to_string(cases) + " degree pairs, " + std::to_string(bad) + " exceptions, " + fmt_seconds(secs)};
}

// Intersection-number criterion against the linear inequality on the full grid.
Outcome criterion5() {
    const auto t0 = Clock::now();
    const auto sum = fibration::grid_sweep(fibration::GridRange{}, 0);
    const double secs = seconds_since(t0);
    return {sum.discrepancies == 0 && sum.cases > 1'000'000 && secs < 60,
            std::to_string(sum.cases) + " cases, " + std::to_string(sum.discrepancies) + " discrepancies, " +
                fmt_seconds(secs)};
}

struct ScanStats {
    std::uint64_t graphs = 0, violations = 0, equalities = 0;
    bool chains_equal = true;
};

ScanStats path_inequality_scan(int n_max, singgraph::GraphClass cls) {
    ScanStats s;
    for (int N = 2; N <= n_max; ++N) {
        singgraph::GraphEnumerator en(N, cls);
        singgraph::ResolutionGraph g;
        while (en.next(g)) {
            const auto r = singgraph::prop52_check(g, cls);
            ++s.graphs;
            if (!r.holds) ++s.violations;
            if (r.equality) ++s.equalities;
        }
        s.chains_equal = s.chains_equal && singgraph::prop52_check(singgraph::ResolutionGraph::chain(N, cls), cls).equality;
    }
    return s;
}

// Path-count inequality on prefix graphs, with the weak class reported.
Outcome criterion6() {
    const auto prefix = path_inequality_scan(10, singgraph::GraphClass::Prefix);
    const auto weak = path_inequality_scan(10, singgraph::GraphClass::Weak);
    std::string detail = "prefix: " + std::to_string(prefix.graphs) + " graphs, " +
                         std::to_string(prefix.violations) + " violations, chains " +
                         (prefix.chains_equal ? "attain equality" : "MISS equality") + "; weak: " +
                         std::to_string(weak.graphs) + " graphs, " + std::to_string(weak.violations) + " violations";
    if (weak.violations > 0) detail += " (open question resolved negatively for the weak class)";
    return {prefix.violations == 0 && prefix.chains_equal && prefix.graphs > 0, detail};
}

// Exact simplex minimum on prefix graphs.
Outcome criterion7() {
    std::uint64_t graphs = 0, below = 0, feasible_dist = 0, dist_optimal = 0, relation_mismatch = 0, face_below = 0;
    bool chains_one = true;
    std::string counterexample;
    for (int N = 2; N <= 8; ++N) {
        singgraph::GraphEnumerator en(N, singgraph::GraphClass::Prefix);
        singgraph::ResolutionGraph g;
        while (en.next(g)) {
            const auto s = singgraph::simplex_min(g);
            ++graphs;
            if (s.min < 1) ++below;
            if (s.trivial) continue;
            if (!s.distinguished_matches_enumeration) ++relation_mismatch;
            bool feasible = false;
            for (const auto& v : s.vertices) {
                if (v.inactive == g.N()) feasible = v.feasible;
                else if (v.feasible && v.objective < 1) ++face_below;  // vertices on {t_N = 0}
            }
            if (!feasible) continue;
            ++feasible_dist;
            if (s.optimum_is_distinguished) ++dist_optimal;
            else if (counterexample.empty())
                counterexample = g.to_string() + " has min " + s.min.get_str() + " at a vertex with t_N = 0, relation vertex " +
                                 s.distinguished_value.get_str();
        }
        chains_one = chains_one && singgraph::simplex_min(singgraph::ResolutionGraph::chain(N)).min == 1;
    }
    std::string detail = std::to_string(graphs) + " graphs, " + std::to_string(below) + " below 1, chains " +
                         (chains_one ? "= 1" : "!= 1") + ", relation reproduces the lambda_2..lambda_{N-1} = 0 vertex with " +
                         std::to_string(relation_mismatch) + " mismatches, t_N = 0 face below 1 on " +
                         std::to_string(face_below) + " vertices; relation vertex feasible on " +
                         std::to_string(feasible_dist) + " graphs and optimal on " + std::to_string(dist_optimal);
    if (!counterexample.empty()) detail += " (first non-optimal: " + counterexample + ")";
    return {below == 0 && chains_one && relation_mismatch == 0 && face_below == 0 && graphs > 0 &&
                dist_optimal == feasible_dist,
            detail};
}

// Groebner dimension against point counting.
Outcome criterion8() {
    const auto t0 = Clock::now();
    std::size_t cases = 0, bad = 0;
    std::string first_bad;
    const Field f2 = Field::prime(2);
    auto compare = [&](const std::vector<Polynomial>& gens, std::uint64_t p, unsigned e) {
        const long g = projective_dimension(gens).proj_dim;
        const long c = dimension_by_point_count(gens, p, e).dimension_estimate;
        ++cases;
        if (g != c) {
            ++bad;
            if (first_bad.empty()) {
                for (const auto& x : gens) first_bad += x.to_string() + "; ";
                first_bad += "groebner " + std::to_string(g) + " points " + std::to_string(c);
            }
        }
    };
    // every square-free monomial ideal with at most 3 generators in n <= 5 variables
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Polynomial> monos;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Exponents e(n, 0);
            for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1;
            monos.push_back(Polynomial::monomial(f2, e, Scalar::one(f2)));
        }
        const std::size_t m = monos.size();
        for (std::size_t a = 0; a < m; ++a) {
            compare({monos[a]}, 2, 4);
            for (std::size_t b = a + 1; b < m; ++b) {
                compare({monos[a], monos[b]}, 2, 4);
                for (std::size_t c = b + 1; c < m; ++c) compare({monos[a], monos[b], monos[c]}, 2, 4);
            }
        }
    }
    const std::size_t monomial_cases = cases;
    // random homogeneous binomials x^a -+ x^b over F_7
    std::mt19937_64 rng(8);
    const Field f7 = Field::prime(7);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t k = 1 + rng() % 3;
        std::vector<Polynomial> gens;
        for (std::size_t g = 0; g < k; ++g) {
            const unsigned d = 1 + static_cast<unsigned>(rng() % 3);
            auto random_monomial = [&] {
                Exponents e(n, 0);
                for (unsigned s = 0; s < d; ++s) ++e[rng() % n];
                return e;
            };
            const Scalar c(f7, rng() % 2 ? 1L : -1L);
            gens.push_back(Polynomial::monomial(f7, random_monomial(), Scalar::one(f7)) -
                           Polynomial::monomial(f7, random_monomial(), c));
        }
        compare(gens, 7, 2);
    }
    return {bad == 0, std::to_string(monomial_cases) + " monomial ideals and " +
                          std::to_string(cases - monomial_cases) + " binomial ideals, " + std::to_string(bad) +
                          " disagreements" + (first_bad.empty() ? "" : " (first: " + first_bad + ")") + ", " +
                          fmt_seconds(seconds_since(t0))};
}

std::string sum_terms(std::size_t from, std::size_t to, const std::string& pattern) {
    // pattern uses '#' for the index
    std::string out;
    for (std::size_t i = from; i < to; ++i) {
        std::string t = pattern;
        for (auto pos = t.find('#'); pos != std::string::npos; pos = t.find('#')) t.replace(pos, 1, std::to_string(i));
        out += (out.empty() ? "" : " + ") + t;
    }
    return out;
}

PointContext make_context(const std::string& f1, const std::string& f2, std::size_t n) {
    const Field f = Field::prime(32003);
    const auto pair = PolyPair::make(parse_polynomial(f1, f, n), parse_polynomial(f2, f, n));
    Vector o(n, Scalar::zero(f));
    o[n - 1] = Scalar::one(f);
    return localize_at_point(pair, o);
}

bool same_report(const RegularityReport& a, const RegularityReport& b) {
    return cli::to_json(a) == cli::to_json(b);
}

// Refuter soundness on violating constructions and the Fermat corpus.
Outcome criterion9() {
    std::vector<std::string> parts;
    bool ok = true;
    const auto mode = CheckMode::refute(20, 9);

    // bi-quadratic point with rk(f_{1,2}, f_{2,2}) = 12
    {
        std::string q2;
        for (std::size_t i = 0; i < 13; ++i)
            q2 += (q2.empty() ? "" : " + ") + std::to_string(i + 1) + "*x" + std::to_string(i) + "^2*x13^9";
        const auto ctx = make_context(sum_terms(0, 12, "x#^2"), q2 + " + " + sum_terms(0, 13, "x#^11"), 14);
        const auto rep = check_regularity(ctx, mode);
        const bool good = rep.verdict == Verdict::Fail && rep.witness && rep.witness->clause == "R2^2.1" &&
                          same_report(rep, check_regularity(ctx, mode)) &&
                          pencil_min_rank(classify_point(ctx).q1, classify_point(ctx).q2) == 12;
        ok = ok && good;
        parts.push_back(std::string("set rank 12: ") + to_string(rep.verdict));
    }
    // quadratic point with pencil form of rank 8 at M = 8
    {
        const auto ctx = make_context("x1*x10^3 + " + sum_terms(0, 10, "x#^4"),
                                      sum_terms(2, 10, "x#^2*x10^4") + " + " + sum_terms(0, 10, "x#^6"), 11);
        const auto rep = check_regularity(ctx, mode);
        const bool good = rep.verdict == Verdict::Fail && rep.witness && rep.witness->clause == "R2:rank" &&
                          classify_point(ctx).pencil_form.rank() == 8 && same_report(rep, check_regularity(ctx, mode));
        ok = ok && good;
        parts.push_back(std::string("pencil form rank 8: ") + to_string(rep.verdict));
    }
    // nonsingular point, L inside {z3 = 0} where f_{1,2} = z3*z4 vanishes
    {
        const auto ctx = make_context("x0*x10^3 + x3*x4*x10^2 + x6^3*x10 + " + sum_terms(0, 10, "x#^4"),
                                      "x1*x10^5 + " + sum_terms(0, 10, "x#^2*x10^4") + " + " +
                                          sum_terms(0, 10, "x#^6"),
                                      11);
        const Field f = ctx.field();
        std::vector<Vector> eqs;
        for (std::size_t k : {0, 1, 3, 5}) {
            Vector e(10, Scalar::zero(f));
            e[k] = Scalar::one(f);
            eqs.push_back(e);
        }
        const auto L = LinearSubspace::from_equations(f, 10, eqs);
        const auto rep = check_R1(ctx, CheckMode::single(L));
        bool good = rep.verdict == Verdict::Fail && rep.witness && rep.witness->subspace &&
                    L.codim() == ctx.tangent_space().codim() + 2;
        if (good) good = check_R1(ctx, CheckMode::single(*rep.witness->subspace)).verdict == Verdict::Fail;
        const auto sampled = check_R1(ctx, mode);
        ok = ok && good;
        parts.push_back(std::string("degenerate codim-2 L: ") + to_string(rep.verdict) + " (replayed), random L: " +
                        to_string(sampled.verdict));
    }
    // Fermat corpus
    {
        const std::filesystem::path dir = std::filesystem::path(CI2_TEST_DATA) / "fermat";
        const auto manifest = cli::read_json(dir / "manifest.json");
        std::size_t pass = 0, fail = 0, other = 0;
        for (const auto& e : manifest) {
            cli::RegularityRequest req;
            req.pair = dir / e.at("pair").get<std::string>();
            req.point = e.at("point").get<std::string>();
            req.samples = e.at("samples").get<unsigned>();
            req.advisory = false;
            const auto out = cli::run_regularity(req, cli::GlobalOptions{});
            if (out.verdict == Verdict::PassSampled) ++pass;
            else if (out.verdict == Verdict::Fail) ++fail;
            else ++other;
        }
        ok = ok && fail == 0 && other == 0 && pass == manifest.size() && pass == 10;
        parts.push_back("Fermat corpus: " + std::to_string(pass) + " pass-sampled, " + std::to_string(fail) +
                        " fail, " + std::to_string(other) + " other");
    }
    std::string detail;
    for (const auto& p : parts) detail += (detail.empty() ? "" : "; ") + p;
    return {ok, detail};
}

// Local multiplicity chains.
Outcome criterion10() {
    using bounds::local_bounds;
    const auto a = local_bounds(1, 2, 1);
    const auto b = local_bounds(mpq_class(3, 2), mpq_class(101, 100), 1);
    const auto b7 = local_bounds(mpq_class(21, 2), mpq_class(707, 100), 7);
    const bool thm = a.theorem34_lower == 1;
    const bool r_flag = b.flags.nu_R_gt_4n_3 && b.nu_R == mpq_class(251, 150);
    const bool z_flag = b.second_stage_induced && b.flags.nu_Z_gt_14n_9 && b.nu_Z_lower == mpq_class(161, 90);
    auto flags_of = [](const bounds::LocalBounds& x) {
        const auto& f = x.flags;
        return std::array<bool, 6>{f.nu_gt_n, f.mu_gt_n, f.nu_le_3n_2, f.nu_R_gt_4n_3, f.nu_Z_gt_14n_9, f.nu_Z_gt_3n_2};
    };
    bool homogeneous = flags_of(b) == flags_of(b7) && b7.nu_R == 7 * b.nu_R && b7.nu_Z_lower == 7 * b.nu_Z_lower;
    std::mt19937_64 rng(10);
    for (int t = 0; t < 200; ++t) {
        const mpq_class nu(1 + static_cast<long>(rng() % 400), 100 + static_cast<long>(rng() % 100));
        const mpq_class mu(1 + static_cast<long>(rng() % 400), 100 + static_cast<long>(rng() % 100));
        const mpq_class n(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
        homogeneous = homogeneous && flags_of(local_bounds(nu, mu, n)) == flags_of(local_bounds(7 * nu, 7 * mu, 7 * n));
    }
    return {thm && r_flag && z_flag && homogeneous,
            std::string("mult bound (2,1) -> ") + a.theorem34_lower.get_str() + ", nu_R = " + b.nu_R.get_str() +
                (r_flag ? " > 4n/3" : " (flag missing)") + ", nu_Z >= " + b.nu_Z_lower.get_str() +
                (z_flag ? " > 14n/9" : " (flag missing)") + ", scaling by 7 " +
                (homogeneous ? "preserves flags" : "CHANGES flags")};
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                             criterion5, criterion6, criterion7, criterion8,
                                                             criterion9, criterion10};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << std::endl;
    }
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failures) << "/"
              << criteria.size() << std::endl;
    return failures ? 1 : 0;
}

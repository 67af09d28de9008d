#include "support/oracles.hpp"

#include "ci2/error.hpp"
#include "ci2/singgraph/graph.hpp"
#include "ci2/singgraph/noether_fano.hpp"
#include "ci2/singgraph/section54.hpp"
#include "ci2/singgraph/simplex.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace ci2;
using namespace ci2::singgraph;

namespace {


ResolutionGraph graph(int N, std::vector<std::pair<int, int>> arrows, GraphClass cls = GraphClass::Prefix) {
    return ResolutionGraph(N, std::move(arrows), cls);
}

std::vector<mpq_class> rationals(std::initializer_list<mpq_class> xs) { return xs; }

mpq_class q(long a, long b) {
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("graph validation") {
    for (auto cls : {GraphClass::Weak, GraphClass::Prefix, GraphClass::BetweenClosed})
        CHECK(validate_graph(ResolutionGraph::chain(6, cls)).valid);
    const auto g = graph(4, {{2, 1}, {3, 2}, {4, 3}, {4, 2}});
    CHECK(validate_graph(g, GraphClass::Weak).valid);
    CHECK(validate_graph(g, GraphClass::Prefix).valid);
    CHECK(g.prefix_length() == 2);
    const auto h = graph(4, {{2, 1}, {3, 2}, {4, 3}, {4, 1}});
    CHECK_FALSE(validate_graph(h, GraphClass::BetweenClosed).valid);
    CHECK_FALSE(validate_graph(h, GraphClass::Prefix).valid);
    CHECK_FALSE(validate_graph(graph(3, {{3, 2}}), GraphClass::Weak).valid);
    CHECK_FALSE(validate_graph(graph(4, {{2, 1}, {3, 2}, {4, 3}, {4, 2}, {4, 1}}), GraphClass::Weak).valid);
    CHECK_THROWS_AS(graph(3, {{2, 3}}), InputError);
    CHECK_THROWS_AS(graph(3, {{4, 1}}), InputError);
    for (auto cls : {GraphClass::Weak, GraphClass::Prefix, GraphClass::BetweenClosed, GraphClass::Base0})
        CHECK(parse_graph_class(to_string(cls)) == cls);
}

TEST_CASE("path counts") {
    const auto c = path_counts(ResolutionGraph::chain(7));
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) CHECK(c(i, j) == (i >= j ? 1 : 0));
    const auto a = path_counts(graph(3, {{2, 1}, {3, 2}, {3, 1}}));
    CHECK(a.p(3) == 1);
    CHECK(a.p(2) == 1);
    CHECK(a.p(1) == 2);
    const auto b = path_counts(graph(4, {{2, 1}, {3, 2}, {4, 3}, {4, 2}}));
    CHECK(b.p(1) == 2);
    CHECK(b.p(2) == 2);
    CHECK(b.p(3) == 1);
    CHECK(b.p(4) == 1);

    for (int N = 2; N <= 6; ++N) {
        GraphEnumerator e(N, GraphClass::Weak);
        ResolutionGraph g;
        while (e.next(g)) {
            const PathCounts p(g);
            std::vector<std::vector<int>> out(static_cast<std::size_t>(N) + 1);
            for (auto [from, to] : g.arrows()) out[static_cast<std::size_t>(from)].push_back(to);
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    CHECK(p(i, j) == oracle::count_paths_dfs(out, i, j));
                    if (i > j) {
                        mpz_class s = 0;
                        for (int l : g.out(i)) s += p(l, j);
                        CHECK(p(i, j) == s);
                    }
                }
            if (validate_graph(g, GraphClass::Prefix).valid) {
                mpz_class s = 0;
                for (int i = 2; i <= g.prefix_length(); ++i) s += p.p(i);
                CHECK(p.p(1) == s);
            }
        }
    }
}

TEST_CASE("graph enumeration") {
    CHECK(count_graphs(3, GraphClass::Weak) == 2);
    CHECK(count_graphs(4, GraphClass::Weak) == 6);
    CHECK(count_graphs(4, GraphClass::BetweenClosed) == 4);
    std::uint64_t factorial = 1;
    for (int N = 2; N <= 8; ++N) {
        CHECK(count_graphs(N, GraphClass::Weak) == factorial);
        CHECK(count_graphs(N, GraphClass::BetweenClosed) == (1ULL << (N - 2)));
        factorial *= static_cast<std::uint64_t>(N);
    }
    for (int N = 2; N <= 6; ++N) {
        for (auto cls : {GraphClass::Weak, GraphClass::Prefix, GraphClass::BetweenClosed}) {
            GraphEnumerator e(N, cls);
            ResolutionGraph g;
            std::set<std::string> seen;
            while (e.next(g)) {
                CHECK(validate_graph(g, cls).valid);
                CHECK(seen.insert(g.to_string()).second);
            }
            CHECK(seen.size() == count_graphs(N, cls));
            CHECK(e.produced() == seen.size());
        }
    }
}

TEST_CASE("Noether-Fano inequality") {
    NFInstance inst;
    inst.graph = graph(3, {{2, 1}, {3, 2}, {3, 1}});
    inst.mu = rationals({0, q(19, 10), q(9, 10), q(9, 10)});
    inst.n = 1;
    auto r = nf_log_inequality(inst);
    CHECK(r.evaluated);
    CHECK(r.lhs == q(28, 5));
    CHECK(r.rhs == 5);
    CHECK(r.holds);

    NFInstance scaled = inst;
    for (auto& m : scaled.mu) m *= 7;
    scaled.n = 7;
    CHECK(nf_log_inequality(scaled).holds == r.holds);

    inst.mu = rationals({0, 1, 1, 1});
    CHECK_FALSE(nf_log_inequality(inst).holds);

    inst.mu = rationals({0, 3, 1, 1});
    CHECK_FALSE(instance_violations(inst).empty());
    inst.mu = rationals({0, 1, q(1, 2), 1});
    CHECK_FALSE(instance_violations(inst).empty());
    inst.mu = rationals({0, 1, 1});
    CHECK_FALSE(instance_violations(inst).empty());
    CHECK_FALSE(nf_log_inequality(inst).evaluated);
}

TEST_CASE("path-count inequality") {
    for (int N = 2; N <= 9; ++N) {
        const auto r = prop52_check(ResolutionGraph::chain(N));
        CHECK(r.k == 2);
        CHECK(r.lhs == N - 1);
        CHECK(r.equality);
    }
    const auto a = prop52_check(graph(4, {{2, 1}, {3, 2}, {4, 3}, {4, 2}}));
    CHECK(a.lhs == 6);
    CHECK(a.rhs == 6);
    CHECK(a.equality);
    const auto b = prop52_check(graph(3, {{2, 1}, {3, 2}, {3, 1}}));
    CHECK(b.k == 3);
    CHECK(b.lhs == 2);
    CHECK(b.rhs == 2);
    CHECK_THROWS_AS(prop52_check(graph(4, {{2, 1}, {3, 2}, {4, 3}, {4, 1}})), InputError);
}

TEST_CASE("simplex minimum") {
    const auto chain = simplex_min(ResolutionGraph::chain(5));
    CHECK(chain.min == 1);
    CHECK(chain.argmin == rationals({1, 1, 1, 1}));
    const auto a = simplex_min(graph(4, {{2, 1}, {3, 2}, {4, 3}, {4, 2}}));
    CHECK(a.min == 1);
    REQUIRE(a.distinguished);
    CHECK((*a.distinguished).back() == q(1, 2));
    CHECK((*a.distinguished).front() == 1);

    // random feasible points never beat the vertex minimum
    std::mt19937_64 rng(101);
    for (int N = 3; N <= 6; ++N) {
        GraphEnumerator e(N, GraphClass::Prefix);
        ResolutionGraph g;
        while (e.next(g)) {
            const auto res = simplex_min(g);
            const PathCounts p(g);
            const int k = g.prefix_length();
            mpq_class rhs = 1;
            for (int i = k + 1; i <= N; ++i) rhs += p.p(i);
            for (int s = 0; s < 200; ++s) {
                std::vector<mpq_class> t(static_cast<std::size_t>(N) + 1, 0);
                for (int i = N; i >= 2; --i) {
                    t[static_cast<std::size_t>(i)] = static_cast<long>(rng() % 4 == 0 ? 0 : rng() % 50);
                    for (int j : g.in(i)) t[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(j)];
                }
                mpq_class h = 0;
                for (int i = 2; i <= N; ++i) h += p.p(i) * t[static_cast<std::size_t>(i)];
                if (h == 0) continue;
                const mpq_class scale = rhs / h;
                mpq_class obj = 0;
                std::vector<mpq_class> point;
                for (int i = 2; i <= N; ++i) point.push_back(t[static_cast<std::size_t>(i)] * scale);
                for (int i = 2; i <= k; ++i) obj += point[static_cast<std::size_t>(i - 2)];
                for (int i = 2; i <= N; ++i) CHECK(simplex_constraint(g, i, point) >= 0);
                CHECK(obj >= res.min);
            }
            CHECK(res.min >= 1);
        }
    }
}

TEST_CASE("chain check on base-0 graphs") {
    NFInstance inst;
    inst.graph = ResolutionGraph::chain(4, GraphClass::Base0);
    inst.mu = rationals({1, 1, 1, 1, 1});
    inst.n = 1;
    inst.delta = rationals({0, 1, 1, 1, 1});
    inst.L = 0;
    const auto ok = section54_chain_check(inst);
    CHECK(ok.outcome == "consistent");
    CHECK(ok.k == 1);
    CHECK(ok.final_threshold == 2);

    NFInstance big = inst;
    big.mu = rationals({1, q(3, 2), 1, 1, 1});
    CHECK(section54_chain_check(big).outcome == "case-1");

    NFInstance late = inst;
    late.L = 2;
    late.delta = rationals({0, 2, 2, 1, 1});
    const auto bad = section54_chain_check(late);
    CHECK(bad.outcome == "inconsistent");
    bool flagged = false;
    for (const auto& c : bad.checks) flagged = flagged || (c.name == "k >= L + 1" && !c.holds);
    CHECK(flagged);

    NFInstance wrong_delta = inst;
    wrong_delta.delta = rationals({0, 1, 2, 1, 1});
    CHECK(section54_chain_check(wrong_delta).outcome == "inconsistent");
    CHECK_FALSE(section54_chain_check(wrong_delta).structural_violations.empty());

    NFInstance no_delta = inst;
    no_delta.delta.reset();
    CHECK_THROWS_AS(section54_chain_check(no_delta), InputError);
}

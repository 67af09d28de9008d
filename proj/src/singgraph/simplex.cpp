#include "ci2/singgraph/simplex.hpp"

#include "ci2/error.hpp"

namespace ci2::singgraph {

namespace {

using Row = std::vector<mpq_class>;

// Solves the square system rows * x = rhs; nullopt when singular.
std::optional<std::vector<mpq_class>> solve(std::vector<Row> a, std::vector<mpq_class> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const mpq_class inv = 1 / a[col][col];
        for (std::size_t c = col; c < n; ++c) a[col][c] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    return b;
}

}  // namespace

mpq_class simplex_constraint(const ResolutionGraph& g, int i, const std::vector<mpq_class>& t) {
    mpq_class v = t.at(static_cast<std::size_t>(i - 2));
    for (int j : g.in(i)) v -= t.at(static_cast<std::size_t>(j - 2));
    return v;
}

SimplexResult simplex_min(const ResolutionGraph& g, GraphClass required) {
    const auto valid = validate_graph(g, required);
    if (!valid.valid) throw InputError("graph is not " + to_string(required) + ": " + valid.violations.front());
    if (g.first_vertex() != 1) throw InputError("simplex bound needs vertices 1..N");
    const int N = g.N();
    SimplexResult r;
    r.k = g.prefix_length();
    if (N < 2 || r.k == N) {
        r.trivial = true;
        r.min = 1;
        return r;
    }
    const PathCounts p(g);
    const std::size_t m = static_cast<std::size_t>(N - 1);
    mpq_class level = 1;
    for (int i = r.k + 1; i <= N; ++i) level += p.p(i);

    Row hyper(m);
    for (int i = 2; i <= N; ++i) hyper[static_cast<std::size_t>(i - 2)] = p.p(i);
    auto lambda_row = [&](int i) {
        Row row(m, 0);
        row[static_cast<std::size_t>(i - 2)] = 1;
        for (int j : g.in(i)) row[static_cast<std::size_t>(j - 2)] -= 1;
        return row;
    };

    bool have_min = false;
    for (int c = 2; c <= N; ++c) {
        std::vector<Row> a;
        std::vector<mpq_class> b;
        for (int i = 2; i <= N; ++i) {
            if (i == c) continue;
            a.push_back(lambda_row(i));
            b.emplace_back(0);
        }
        a.push_back(hyper);
        b.push_back(level);
        auto sol = solve(std::move(a), std::move(b));
        if (!sol) {
            r.degenerate.push_back(c);
            continue;
        }
        SimplexVertex v;
        v.inactive = c;
        v.t = std::move(*sol);
        v.feasible = simplex_constraint(g, c, v.t) >= 0;
        for (int i = 2; i <= r.k; ++i) v.objective += v.t[static_cast<std::size_t>(i - 2)];
        if (v.feasible && (!have_min || v.objective < r.min)) {
            have_min = true;
            r.min = v.objective;
            r.argmin = v.t;
            r.argmin_inactive = c;
        }
        r.vertices.push_back(std::move(v));
    }
    if (!have_min) throw InputError("simplex has no feasible vertex");

    mpq_class squares = 0, head = 0;
    for (int i = 2; i <= N; ++i) squares += mpq_class(p.p(i) * p.p(i));
    for (int i = 2; i <= r.k; ++i) head += p.p(i);
    const mpq_class aN = level / squares;
    std::vector<mpq_class> dist(m);
    for (int i = 2; i <= N; ++i) dist[static_cast<std::size_t>(i - 2)] = aN * p.p(i);
    r.distinguished_value = head * aN;
    for (const auto& v : r.vertices) {
        if (v.inactive != N) continue;
        r.distinguished_matches_enumeration = v.t == dist;
    }
    for (const auto& v : r.vertices)
        if (v.feasible && v.objective == r.min && v.t == dist) r.optimum_is_distinguished = true;
    r.distinguished = std::move(dist);
    return r;
}

}  // namespace ci2::singgraph

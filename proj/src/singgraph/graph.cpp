#include "ci2/singgraph/graph.hpp"

#include "ci2/error.hpp"

#include <algorithm>

namespace ci2::singgraph {

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Weak: return "weak";
        case GraphClass::Prefix: return "prefix";
        case GraphClass::BetweenClosed: return "between-closed";
        case GraphClass::Base0: break;
    }
    return "base0";
}

GraphClass parse_graph_class(const std::string& s) {
    for (auto c : {GraphClass::Weak, GraphClass::Prefix, GraphClass::BetweenClosed, GraphClass::Base0})
        if (to_string(c) == s) return c;
    throw InputError("unknown graph class '" + s + "'");
}

ResolutionGraph::ResolutionGraph(int N, std::vector<std::pair<int, int>> arrows, GraphClass cls)
    : n_(N), cls_(cls), arrows_(std::move(arrows)) {
    if (N < 1) throw InputError("graph needs at least one vertex");
    if (N > 64) throw InputError("graph has too many vertices");
    const int first = first_vertex();
    std::sort(arrows_.begin(), arrows_.end());
    arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
    out_.assign(static_cast<std::size_t>(N) + 1, {});
    in_.assign(static_cast<std::size_t>(N) + 1, {});
    for (const auto& [i, j] : arrows_) {
        if (i < first || i > N || j < first || j > N)
            throw InputError("arrow " + std::to_string(i) + "->" + std::to_string(j) + " leaves the vertex range");
        if (i <= j) throw InputError("arrow " + std::to_string(i) + "->" + std::to_string(j) + " must decrease");
        out_[static_cast<std::size_t>(i)].push_back(j);
        in_[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& o : out_) std::sort(o.rbegin(), o.rend());
}

ResolutionGraph ResolutionGraph::chain(int N, GraphClass cls) {
    std::vector<std::pair<int, int>> arrows;
    const int first = cls == GraphClass::Base0 ? 0 : 1;
    for (int i = first + 1; i <= N; ++i) arrows.emplace_back(i, i - 1);
    return ResolutionGraph(N, std::move(arrows), cls);
}

bool ResolutionGraph::has_arrow(int i, int j) const {
    return std::binary_search(arrows_.begin(), arrows_.end(), std::pair{i, j});
}

int ResolutionGraph::prefix_length() const {
    const int first = first_vertex();
    int k = first;
    while (k + 1 <= n_ && has_arrow(k + 1, first)) ++k;
    return k;
}

std::string ResolutionGraph::to_string() const {
    std::string s = "N=" + std::to_string(n_) + " {";
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (a) s += ", ";
        s += std::to_string(arrows_[a].first) + "->" + std::to_string(arrows_[a].second);
    }
    return s + "}";
}

GraphValidation validate_graph(const ResolutionGraph& g, std::optional<GraphClass> cls_opt) {
    const GraphClass cls = cls_opt.value_or(g.declared_class());
    GraphValidation v;
    auto fail = [&](std::string msg) {
        v.valid = false;
        v.violations.push_back(std::move(msg));
    };
    const int N = g.N();
    if ((cls == GraphClass::Base0) != (g.first_vertex() == 0)) {
        fail("vertex numbering does not match class " + to_string(cls));
        return v;
    }
    const int first = g.first_vertex();
    for (int i = first + 1; i <= N; ++i)
        if (!g.has_arrow(i, i - 1)) fail("missing arrow " + std::to_string(i) + "->" + std::to_string(i - 1));
    if (cls == GraphClass::Base0) return v;

    for (int i = 2; i <= N; ++i)
        if (g.out(i).size() > 2) fail("vertex " + std::to_string(i) + " emits more than two arrows");
    if (cls == GraphClass::Prefix) {
        const int k = g.prefix_length();
        for (int i : g.in(1))
            if (i > k)
                fail("arrow " + std::to_string(i) + "->1 outside the prefix 2.." + std::to_string(k));
    }
    if (cls == GraphClass::BetweenClosed) {
        for (const auto& [i, j] : g.arrows())
            for (int l = j + 1; l < i; ++l)
                if (!g.has_arrow(i, l))
                    fail("arrow " + std::to_string(i) + "->" + std::to_string(j) + " without " + std::to_string(i) +
                         "->" + std::to_string(l));
    }
    return v;
}

PathCounts::PathCounts(const ResolutionGraph& g) : n_(g.N()), first_(g.first_vertex()) {
    const auto size = static_cast<std::size_t>(n_ + 1);
    table_.assign(size, std::vector<mpz_class>(size, 0));
    for (int i = first_; i <= n_; ++i) {
        auto& row = table_[static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(i)] = 1;
        for (int l : g.out(i)) {
            const auto& sub = table_[static_cast<std::size_t>(l)];
            for (int j = first_; j <= l; ++j) row[static_cast<std::size_t>(j)] += sub[static_cast<std::size_t>(j)];
        }
    }
}

const mpz_class& PathCounts::operator()(int i, int j) const {
    if (i < first_ || j < first_ || i > n_ || j > n_) throw InputError("path count index out of range");
    return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

PathCounts path_counts(const ResolutionGraph& g) { return PathCounts(g); }

GraphEnumerator::GraphEnumerator(int N, GraphClass cls) : n_(N), cls_(cls) {
    if (N < 1) throw InputError("enumeration needs N >= 1");
    if (N > kMaxN) throw InputError("enumeration limited to N <= " + std::to_string(kMaxN));
    if (cls == GraphClass::Base0) throw InputError("base-0 graphs are not enumerated");
    second_.assign(static_cast<std::size_t>(N) + 1, 0);
}

bool GraphEnumerator::advance() {
    for (int i = 3; i <= n_; ++i) {
        int& s = second_[static_cast<std::size_t>(i)];
        if (cls_ == GraphClass::BetweenClosed) {
            if (s == 0) {
                s = i - 2;
                return true;
            }
        } else if (s < i - 2) {
            ++s;
            return true;
        }
        s = 0;
    }
    return false;
}

bool GraphEnumerator::accepted() const {
    if (cls_ != GraphClass::Prefix) return true;
    // arrows into 1 must come from a contiguous run starting at 3
    bool run = true;
    for (int i = 3; i <= n_; ++i) {
        const bool to_one = second_[static_cast<std::size_t>(i)] == 1;
        if (to_one && !run) return false;
        if (!to_one) run = false;
    }
    return true;
}

bool GraphEnumerator::next(ResolutionGraph& g) {
    if (done_) return false;
    do {
        if (!started_) {
            started_ = true;
        } else if (!advance()) {
            done_ = true;
            return false;
        }
    } while (!accepted());
    std::vector<std::pair<int, int>> arrows;
    for (int i = 2; i <= n_; ++i) {
        arrows.emplace_back(i, i - 1);
        if (const int s = second_[static_cast<std::size_t>(i)]; s != 0) arrows.emplace_back(i, s);
    }
    g = ResolutionGraph(n_, std::move(arrows), cls_);
    ++produced_;
    return true;
}

std::uint64_t count_graphs(int N, GraphClass cls) {
    GraphEnumerator e(N, cls);
    ResolutionGraph g;
    while (e.next(g)) {
    }
    return e.produced();
}

}  // namespace ci2::singgraph

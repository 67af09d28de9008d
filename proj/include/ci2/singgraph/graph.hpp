#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ci2::singgraph {

/// Weak: i -> i-1 for every i >= 2 and at most two out-arrows per vertex.
/// Prefix: weak, and the arrows into 1 come exactly from 2..k.
/// BetweenClosed: weak, and i -> j implies i -> l for all j < l < i.
/// Base0: vertices 0..N, i -> i-1 for i >= 1, no out-degree limit.
enum class GraphClass { Weak, Prefix, BetweenClosed, Base0 };

std::string to_string(GraphClass c);
GraphClass parse_graph_class(const std::string& s);

class ResolutionGraph {
public:
    ResolutionGraph() = default;
    /// Throws InputError on arrows that leave the vertex range or do not
    /// decrease the index.
    ResolutionGraph(int N, std::vector<std::pair<int, int>> arrows, GraphClass cls = GraphClass::Prefix);

    static ResolutionGraph chain(int N, GraphClass cls = GraphClass::Prefix);

    int N() const { return n_; }
    int first_vertex() const { return cls_ == GraphClass::Base0 ? 0 : 1; }
    GraphClass declared_class() const { return cls_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    /// Targets of arrows leaving i, descending.
    const std::vector<int>& out(int i) const { return out_[static_cast<std::size_t>(i)]; }
    /// Sources of arrows entering j, ascending.
    const std::vector<int>& in(int j) const { return in_[static_cast<std::size_t>(j)]; }
    bool has_arrow(int i, int j) const;
    /// Largest k with first+1 .. k all pointing at the first vertex; the
    /// first vertex itself when nothing points at it.
    int prefix_length() const;
    std::string to_string() const;

private:
    int n_ = 0;
    GraphClass cls_ = GraphClass::Prefix;
    std::vector<std::pair<int, int>> arrows_;  // sorted, (from, to)
    std::vector<std::vector<int>> out_, in_;
};

struct GraphValidation {
    bool valid = true;
    std::vector<std::string> violations;
};

/// Checks g against `cls` (the declared class when omitted).
GraphValidation validate_graph(const ResolutionGraph& g, std::optional<GraphClass> cls = std::nullopt);

class PathCounts {
public:
    explicit PathCounts(const ResolutionGraph& g);

    int N() const { return n_; }
    /// Number of paths from i to j; p(i, i) = 1.
    const mpz_class& operator()(int i, int j) const;
    /// p_i = p(N, i).
    const mpz_class& p(int i) const { return (*this)(n_, i); }

private:
    int n_, first_;
    std::vector<std::vector<mpz_class>> table_;
};

PathCounts path_counts(const ResolutionGraph& g);

/// Lazy deterministic enumeration of all graphs on 1..N in a class.
class GraphEnumerator {
public:
    static constexpr int kMaxN = 12;

    GraphEnumerator(int N, GraphClass cls);
    /// Writes the next graph into g; false when exhausted.
    bool next(ResolutionGraph& g);
    std::uint64_t produced() const { return produced_; }

private:
    bool advance();
    bool accepted() const;

    int n_;
    GraphClass cls_;
    std::vector<int> second_;  // second_[i] = extra target of vertex i, 0 for none
    bool started_ = false, done_ = false;
    std::uint64_t produced_ = 0;
};

std::uint64_t count_graphs(int N, GraphClass cls);

}  // namespace ci2::singgraph

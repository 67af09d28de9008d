#include "ci2/singgraph/noether_fano.hpp"

#include "ci2/error.hpp"

namespace ci2::singgraph {

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::vector<std::string> instance_violations(const NFInstance& inst) {
    const ResolutionGraph& g = inst.graph;
    std::vector<std::string> out = validate_graph(g).violations;
    const int N = g.N();
    const bool base0 = g.first_vertex() == 0;
    if (inst.mu.size() != static_cast<std::size_t>(N) + 1) {
        out.push_back("expected " + std::to_string(base0 ? N + 1 : N) + " multiplicities");
        return out;
    }
    if (inst.n <= 0) out.push_back("n must be positive");
    const int lead = base0 ? 0 : 1;
    if (inst.mu_at(lead) > 2 * inst.n)
        out.push_back("mu_" + std::to_string(lead) + " = " + q_str(inst.mu_at(lead)) + " exceeds 2n");
    for (int i = g.first_vertex(); i <= N; ++i)
        if (inst.mu_at(i) < 0) out.push_back("mu_" + std::to_string(i) + " is negative");
    if (!base0) {
        for (int i = 2; i <= N; ++i) {
            mpq_class s = 0;
            for (int j : g.in(i)) s += inst.mu_at(j);
            if (inst.mu_at(i) < s)
                out.push_back("mu_" + std::to_string(i) + " = " + q_str(inst.mu_at(i)) +
                              " is below the sum over incoming arrows " + q_str(s));
        }
    }
    if (inst.delta) {
        if (!base0) out.push_back("discrepancy data needs a base-0 graph");
        if (inst.delta->size() != static_cast<std::size_t>(N) + 1) {
            out.push_back("expected " + std::to_string(N) + " delta values");
        } else {
            for (int i = 1; i <= N; ++i)
                if ((*inst.delta)[static_cast<std::size_t>(i)] < 1)
                    out.push_back("delta_" + std::to_string(i) + " must be at least 1");
        }
    }
    return out;
}

NFResult nf_log_inequality(const NFInstance& inst) {
    NFResult r;
    r.violations = instance_violations(inst);
    r.weighted = inst.delta.has_value();
    if (!r.violations.empty()) return r;
    const ResolutionGraph& g = inst.graph;
    const PathCounts p(g);
    const int N = g.N();
    if (!r.weighted) {
        mpq_class sum_p = 0;
        for (int i = 1; i <= N; ++i) {
            r.lhs += mpq_class(p.p(i)) * inst.mu_at(i);
            sum_p += p.p(i);
        }
        r.rhs = inst.n * (sum_p + 1);
    } else {
        const auto& delta = *inst.delta;
        mpq_class weight = mpq_class(p.p(0));
        r.lhs = mpq_class(p.p(0)) * inst.mu_at(0);
        for (int i = 1; i <= N; ++i) {
            r.lhs += mpq_class(p.p(i)) * inst.mu_at(i);
            weight += mpq_class(p.p(i)) * delta[static_cast<std::size_t>(i)];
        }
        r.rhs = (weight + 1) * inst.n;
    }
    r.evaluated = true;
    r.holds = r.lhs > r.rhs;
    return r;
}

Prop52Result prop52_check(const ResolutionGraph& g, GraphClass required) {
    const auto v = validate_graph(g, required);
    if (!v.valid) throw InputError("graph is not " + to_string(required) + ": " + v.violations.front());
    if (g.first_vertex() != 1) throw InputError("path inequality needs vertices 1..N");
    const PathCounts p(g);
    Prop52Result r;
    r.k = g.prefix_length();
    mpz_class head = 0, tail = 1;
    for (int i = 2; i <= r.k; ++i) head += p.p(i);
    for (int i = r.k + 1; i <= g.N(); ++i) tail += p.p(i);
    r.lhs = head * tail;
    r.rhs = 0;
    for (int i = 2; i <= g.N(); ++i) r.rhs += p.p(i) * p.p(i);
    r.holds = r.lhs >= r.rhs;
    r.equality = r.lhs == r.rhs;
    return r;
}

}  // namespace ci2::singgraph

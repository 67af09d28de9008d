#include "ci2/singgraph/section54.hpp"

#include "ci2/error.hpp"

namespace ci2::singgraph {

namespace {

std::string z(const mpz_class& v) { return v.get_str(); }

}  // namespace

Section54Report section54_chain_check(const NFInstance& inst) {
    const ResolutionGraph& g = inst.graph;
    if (g.first_vertex() != 0) throw InputError("chain check needs a base-0 graph");
    if (!inst.delta) throw InputError("chain check needs discrepancy data");
    if (!inst.L) throw InputError("chain check needs L");
    Section54Report rep;
    rep.nf = nf_log_inequality(inst);
    rep.structural_violations = rep.nf.violations;
    const int N = g.N();
    const int L = *inst.L;
    const int k = g.prefix_length();
    rep.k = k;
    rep.L = L;
    if (L < 0 || L > N) rep.structural_violations.push_back("L must lie in 0..N");
    if (inst.k && *inst.k != k)
        rep.structural_violations.push_back("declared k = " + std::to_string(*inst.k) +
                                            " but the arrows into 0 give k = " + std::to_string(k));
    if (k < 1) rep.structural_violations.push_back("vertex 1 must point at 0");
    for (int i : g.in(0))
        if (i > k) rep.structural_violations.push_back("arrow " + std::to_string(i) + "->0 outside 1..k");
    if (!rep.structural_violations.empty()) {
        rep.outcome = "inconsistent";
        return rep;
    }
    const auto& delta = *inst.delta;
    for (int i = 1; i <= N; ++i) {
        const mpq_class& d = delta[static_cast<std::size_t>(i)];
        if (i <= L && d < 2)
            rep.structural_violations.push_back("delta_" + std::to_string(i) + " < 2 but the centre is before L");
        if (i > L && d != 1)
            rep.structural_violations.push_back("delta_" + std::to_string(i) + " != 1 but the centre is after L");
    }
    const mpq_class& n = inst.n;
    const mpq_class& mu0 = inst.mu_at(0);
    rep.final_threshold = 3 * n - mu0;

    if (N >= 1 && inst.mu_at(1) > n) {
        rep.outcome = "case-1";
        rep.checks.push_back({"mu_1 > n", true, "mu_1 = " + inst.mu_at(1).get_str() + " > n"});
        return rep;
    }
    auto add = [&](std::string name, bool holds, std::string detail) {
        rep.checks.push_back({std::move(name), holds, std::move(detail)});
    };
    const PathCounts p(g);

    add("k >= L + 1", k >= L + 1, "k = " + std::to_string(k) + ", L = " + std::to_string(L));

    bool chain_ok = true;
    std::string chain_detail;
    for (int a = L + 1; a <= k; ++a)
        for (int t : g.out(a))
            if (t != 0 && t != a - 1) {
                chain_ok = false;
                chain_detail += std::to_string(a) + "->" + std::to_string(t) + " ";
            }
    add("vertices L+1..k only point at a-1 and 0", chain_ok, chain_ok ? "" : "extra arrows " + chain_detail);

    bool entry_ok = true;
    std::string entry_detail;
    for (int b = k + 1; b <= N; ++b)
        for (int a : g.out(b))
            if (a <= k && !(b == k + 1 && a == k) && a != k - 1) {
                entry_ok = false;
                entry_detail += std::to_string(b) + "->" + std::to_string(a) + " ";
            }
    add("arrows from above k enter only at k-1", entry_ok, entry_ok ? "" : "offending " + entry_detail);

    if (k >= 2) {
        const int lo = std::max(L, 1);
        bool equal_ok = true;
        for (int i = lo; i < k - 1; ++i)
            if (p.p(i) != p.p(i + 1)) equal_ok = false;
        add("p_L = ... = p_{k-1}", equal_ok, "p_" + std::to_string(lo) + " = " + z(p.p(lo)));
        mpz_class s = p.p(k);
        for (int i : g.in(k - 1))
            if (i != k) s += p.p(i);
        add("p_{k-1} = p_k + sum_{i->k-1, i != k} p_i", s == p.p(k - 1),
            z(p.p(k - 1)) + " vs " + z(s));
    }
    if (L >= 1) {
        bool factor_ok = true;
        for (int i = 1; i <= L; ++i)
            if (p.p(i) != p.p(L) * p(L, i)) factor_ok = false;
        add("p_i = p_L p_{L,i} for i <= L", factor_ok, "");

        mpq_class lhs = 0, rhs = 0, weight = 0;
        for (int i = 1; i <= L; ++i) {
            const mpq_class pli(p(L, i));
            const mpq_class delta_e = delta[static_cast<std::size_t>(i)] - 1;
            lhs += pli * inst.mu_at(i);
            rhs += pli * (delta_e + 2 - mu0 / n) * n;
            weight += pli;
        }
        for (int i = L + 1; i <= k; ++i) lhs += inst.mu_at(i);
        rep.chain_lhs = lhs;
        rep.chain_rhs = rhs;
        add("restricted chain inequality", lhs > rhs, lhs.get_str() + " > " + rhs.get_str());
        rep.nu_E1_lower = lhs / weight;
        rep.final_bound_applicable = true;
        rep.final_bound_holds = *rep.nu_E1_lower > rep.final_threshold;
    }

    bool ok = rep.structural_violations.empty();
    for (const auto& c : rep.checks) ok = ok && c.holds;
    rep.outcome = ok ? "consistent" : "inconsistent";
    return rep;
}

}  // namespace ci2::singgraph

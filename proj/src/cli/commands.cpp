#include "ci2/cli/commands.hpp"

#include "ci2/bounds/codim.hpp"
#include "ci2/bounds/local.hpp"
#include "ci2/cli/batch.hpp"
#include "ci2/cli/io.hpp"
#include "ci2/error.hpp"
#include "ci2/exact/pencil.hpp"
#include "ci2/fibration/fibration.hpp"
#include "ci2/regularity/classify.hpp"
#include "ci2/singgraph/section54.hpp"
#include "ci2/singgraph/simplex.hpp"
#include "ci2/zerodim/dimension.hpp"
#include "ci2/zerodim/point_count.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

namespace ci2::cli {

namespace {

struct Output {
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> warnings;
    std::string summary;
    int exit_code = 0;
    bool uses_seed = false;
};

std::string z_str(const mpz_class& z) { return z.get_str(); }

json warnings_json(const std::vector<std::string>& w) { return json(w); }

void merge_warnings(Output& o, const std::vector<std::string>& w) {
    for (const auto& s : w)
        if (std::find(o.warnings.begin(), o.warnings.end(), s) == o.warnings.end()) o.warnings.push_back(s);
}

GroebnerOptions groebner_options(const GlobalOptions& g) {
    GroebnerOptions o;
    o.max_reductions = g.budget;
    return o;
}

json point_class_json(const PointClass& cls) {
    json j;
    j["kind"] = to_string(cls.kind);
    j["f11"] = to_json(cls.xi1);
    j["f21"] = to_json(cls.xi2);
    j["rank_f12"] = cls.q1.rank();
    j["rank_f22"] = cls.q2.rank();
    if (cls.kind == PointKind::Quadratic) {
        j["tau"] = to_json(cls.tau);
        j["alpha"] = {cls.alpha1.to_string(), cls.alpha2.to_string()};
        j["pencil_form_rank"] = cls.pencil_form.rank();
    }
    if (cls.kind == PointKind::BiQuadratic) {
        const auto closure = pencil_min_rank_detailed(cls.q1, cls.q2, PencilSemantics::AlgebraicClosure);
        j["pencil_min_rank"] = closure.min_rank;
        j["pencil_min_rank_semantics"] = to_string(closure.semantics);
    }
    j["good_singularity"] = check_good_singularity(cls);
    return j;
}

// ---------------------------------------------------------------- commands

Output cmd_rank(const std::string& path, const GlobalOptions& g) {
    Output o;
    const auto in = read_text_input(path, g.prime);
    const Matrix m = parse_matrix(in);
    o.inputs = {{"matrix", path}, {"field", in.field.to_string()}};
    const std::size_t r = m.rank();
    o.result = {{"rows", m.rows()}, {"cols", m.cols()}, {"rank", r}};
    o.summary = "rank " + std::to_string(r) + " (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " over " +
                in.field.to_string() + ")";
    return o;
}

PencilSemantics parse_semantics(const std::string& s) {
    if (s == "default") return PencilSemantics::Default;
    if (s == "closure") return PencilSemantics::AlgebraicClosure;
    if (s == "rational") return PencilSemantics::RationalPoints;
    throw InputError("unknown semantics '" + s + "' (default, closure, rational)");
}

Output cmd_pencil_rank(const std::string& path, const std::string& semantics, std::optional<std::size_t> n_vars,
                       std::uint64_t max_points, const GlobalOptions& g) {
    Output o;
    const auto in = read_text_input(path, g.prime);
    const auto polys = parse_polynomials(in, n_vars);
    if (polys.empty()) throw InputError("no forms given");
    std::vector<QuadraticForm> forms;
    for (const auto& p : polys) forms.push_back(quadratic_form_of(p));
    o.inputs = {{"forms", path}, {"field", in.field.to_string()}, {"count", forms.size()},
                {"n_vars", forms.front().n_vars()}};
    json r;
    if (forms.size() == 1) {
        r["min_rank"] = forms[0].rank();
        r["method"] = "single form";
    } else if (forms.size() == 2) {
        const auto res = pencil_min_rank_detailed(forms[0], forms[1], parse_semantics(semantics));
        r["min_rank"] = res.min_rank;
        r["method"] = "minor gcd";
        r["semantics"] = to_string(res.semantics);
        r["attained_at_infinity"] = res.attained_at_infinity;
        r["root_locus"] = res.root_locus ? json(res.root_locus->to_string()) : json(nullptr);
    } else {
        const auto res = set_min_rank_detailed(forms, max_points);
        r["min_rank"] = res.min_rank;
        r["method"] = "enumeration over P^{k-1}(F_p)";
        r["witness"] = res.witness;
        r["primes"] = res.primes;
        if (in.field.is_rational())
            o.warnings.push_back("rational forms answered modulo the listed primes (upper bound, exact off bad primes)");
    }
    o.summary = "min rank " + r["min_rank"].dump();
    o.result = std::move(r);
    return o;
}

PointContext load_context(const std::string& pair_path, const std::string& point, const GlobalOptions& g,
                          json& inputs) {
    const auto in = read_text_input(pair_path, g.prime);
    const PolyPair pair = parse_pair(in);
    const Vector pt = parse_vector(point, pair.field());
    inputs["pair"] = pair_path;
    inputs["field"] = pair.field().to_string();
    inputs["d1"] = pair.d1;
    inputs["d2"] = pair.d2;
    inputs["n_vars"] = pair.n_vars();
    inputs["point"] = to_json(pt);
    return localize_at_point(pair, pt);
}

Output cmd_classify(const std::string& pair_path, const std::string& point, const std::string& type,
                    const GlobalOptions& g) {
    Output o;
    const PointContext ctx = load_context(pair_path, point, g, o.inputs);
    const PointClass cls = classify_point(ctx);
    o.result = point_class_json(cls);
    o.result["chart"] = ctx.chart;
    o.result["fibre_dim"] = ctx.pair.fibre_dim();
    if (!type.empty()) {
        const Vector rr = parse_vector(type, Field::rationals());
        if (rr.size() != 2) throw InputError("--type expects r1,r2");
        const auto r1 = static_cast<std::size_t>(rr[0].rational().get_num().get_ui());
        const auto r2 = static_cast<std::size_t>(rr[1].rational().get_num().get_ui());
        const auto st = singularity_type(cls, r1, r2);
        o.inputs["type"] = {r1, r2};
        o.result["singularity_type"] = {{"holds", st.holds}, {"rank", st.rank}, {"codim_bound", st.codim_bound}};
    }
    // the type-(9,13) estimate and the codimension claimed for regular pairs are reported side by side
    o.result["sing_codim"] = {{"type_9_13_bound", 8}, {"regular_claim", 10}};
    o.summary = "point is " + to_string(cls.kind) + (check_good_singularity(cls) ? "" : " (not a good singularity)");
    return o;
}

Output cmd_check_regularity(const RegularityRequest& req, const std::string& witness_out, const GlobalOptions& g) {
    Output o;
    o.uses_seed = true;
    o.inputs = {{"pair", req.pair.string()}, {"point", req.point}, {"condition", req.condition},
                {"samples", req.samples}, {"subspace", req.subspace ? json(req.subspace->string()) : json(nullptr)},
                {"advisory", req.advisory}};
    auto run = run_regularity(req, g);
    const auto& rep = run.result["report"];
    if (!witness_out.empty() && rep["witness"].is_object() && rep["witness"]["subspace"].is_array()) {
        std::ofstream f(witness_out);
        if (!f) throw InputError("cannot write " + witness_out);
        if (run.result["field"] != "Q") f << "# field " << run.result["field"].get<std::string>().substr(2) << "\n";
        for (const auto& v : rep["witness"]["subspace"]) {
            std::string line;
            for (const auto& x : v) line += (line.empty() ? "" : ", ") + x.get<std::string>();
            f << line << "\n";
        }
    }
    o.summary = rep["condition"].get<std::string>() + ": " + to_string(run.verdict);
    if (run.verdict == Verdict::PassSampled && req.samples > 0 && !req.subspace)
        o.warnings.push_back("pass verdict is sampled over " + std::to_string(req.samples) + " random subspaces");
    if (run.verdict == Verdict::Budget) o.exit_code = 2;
    o.result = std::move(run.result);
    return o;
}

Output cmd_codim_bounds(std::optional<long> M_opt, std::optional<unsigned> d1, std::optional<unsigned> d2) {
    Output o;
    if (d1.has_value() != d2.has_value()) throw InputError("give both --d1 and --d2");
    long M = 0;
    if (d1) {
        M = static_cast<long>(*d1) + static_cast<long>(*d2) - 2;
        if (M_opt && *M_opt != M) throw InputError("M must equal d1 + d2 - 2");
    } else if (M_opt) {
        M = *M_opt;
    } else {
        throw InputError("give --M or --d1/--d2");
    }
    o.inputs = {{"M", M}};
    if (d1) o.inputs["d1"] = *d1, o.inputs["d2"] = *d2;

    json r;
    const auto t_general = bounds::theorem02_bound(M, 2);
    const auto t_three = bounds::theorem02_bound(M, 3);
    merge_warnings(o, t_general.warnings);
    r["codim_bound"] = {{"d1_not_3", z_str(t_general.value)}, {"d1_eq_3", z_str(t_three.value)}};
    const auto c = bounds::condition_codims(M);
    r["condition_codims"] = {{"B(1)", z_str(c.nonsingular)},
                             {"B(2^2.1)", z_str(c.b22_1)},
                             {"B(2^2.2)", z_str(c.b22_2)},
                             {"B(2^2.3)", z_str(c.b22_3)},
                             {"B(2^2.2),d1=3", z_str(c.b22_2_d1_3)},
                             {"B(2)", "not given (stated to exceed B(2^2.3))"}};
    // codim(F \ F_reg) >= min codim(B) - M; the published bound sits one below
    const mpz_class assembled = c.b22_2 - M;
    r["assembly"] = {{"min_B_minus_M", z_str(assembled)},
                     {"bound", z_str(t_general.value)},
                     {"slack", z_str(assembled - t_general.value)},
                     {"bound_le_B22_2_minus_M_plus_1", t_general.value <= assembled + 1}};
    if (M >= 6) {
        r["mq_bound"] = {{"k=4", z_str(bounds::theorem21_bound(M - 1, 4))}};
        if (M >= 7) r["mq_bound"]["k=5"] = z_str(bounds::theorem21_bound(M - 1, 5));
    }
    if (d1) {
        r["codim_bound_for_d1"] = z_str(*d1 == 3 ? t_three.value : t_general.value);
        const auto pm = bounds::projection_minimum(*d1, *d2);
        json entries = json::array();
        for (const auto& e : pm.entries)
            entries.push_back({{"position", e.position}, {"degree", e.degree}, {"value", z_str(e.value)}});
        r["projection_minimum"] = {{"value", z_str(pm.value)},
                                   {"argmin_position", pm.argmin_position},
                                   {"argmin_degree", pm.argmin_degree},
                                   {"closed_form", z_str(pm.closed_form)},
                                   {"matches_closed_form", pm.matches_closed_form},
                                   {"entries", entries}};
        json th = json::object();
        for (auto mc : {bounds::MultCase::Nonsingular, bounds::MultCase::Quadratic,
                        bounds::MultCase::BiquadraticCodim2, bounds::MultCase::BiquadraticCodim3})
            th[bounds::to_string(mc)] = q_str(bounds::mult_deg_threshold(mc, *d1, *d2));
        r["mult_deg_threshold"] = th;
        const auto rc = bounds::hypertangent_ratio_check(*d1, *d2);
        r["ratio_check"] = {{"case", rc.case_index}, {"expression", rc.expression}, {"value", q_str(rc.value)},
                            {"satisfied", rc.satisfied}};
    }
    o.summary = "codimension bound " + z_str(d1 && *d1 == 3 ? t_three.value : t_general.value) + " at M = " +
                std::to_string(M);
    o.result = std::move(r);
    return o;
}

json superrigidity_json(const fibration::SuperrigidityReport& r) {
    const auto k = fibration::anticanonical_class(r.spec);
    return {{"anticanonical_class", k.to_string()},
            {"intersection_number", r.intersection.number},
            {"intersection_satisfied", r.intersection.satisfied},
            {"lhs", q_str(r.lhs)},
            {"main_inequality", r.main_inequality},
            {"condition_iii", r.condition_iii},
            {"k_condition", r.k_condition},
            {"non_rigid_regime", r.non_rigid},
            {"verdict", fibration::to_string(r.category)},
            {"equivalence_holds", r.equivalence_holds},
            {"base_dim_budget", z_str(r.base_dim_budget)},
            {"within_budget", r.within_budget}};
}

Output cmd_fibration(const fibration::FibrationSpec& s, bool grid, const fibration::GridRange& range,
                     unsigned threads) {
    Output o;
    if (grid) {
        o.inputs = {{"grid", true}, {"m_max", range.m_max}, {"l_max", range.l_max}, {"d_max", range.d_max}};
        const auto sum = fibration::grid_sweep(range, threads);
        json bad = json::array();
        for (const auto& b : sum.first_discrepancies)
            bad.push_back({{"m", b.m}, {"d1", b.d1}, {"d2", b.d2}, {"l1", b.l1}, {"l2", b.l2}});
        o.result = {{"cases", sum.cases},
                    {"discrepancies", sum.discrepancies},
                    {"superrigid", sum.superrigid},
                    {"condition_iii_only", sum.iii_only},
                    {"k_condition_only", sum.k_only},
                    {"non_rigid", sum.non_rigid},
                    {"first_discrepancies", bad}};
        o.summary = std::to_string(sum.cases) + " cases, " + std::to_string(sum.discrepancies) + " discrepancies";
        return o;
    }
    o.inputs = {{"m", s.m}, {"d1", s.d1}, {"d2", s.d2}, {"l1", s.l1}, {"l2", s.l2}};
    const auto r = fibration::superrigidity_criterion(s);
    merge_warnings(o, r.warnings);
    if (!r.within_budget) o.warnings.push_back("m exceeds the base dimension allowed by the codimension bound");
    o.result = superrigidity_json(r);
    o.summary = fibration::to_string(r.category) + ", intersection number " + std::to_string(r.intersection.number);
    return o;
}

json path_table_json(const singgraph::ResolutionGraph& g, const singgraph::PathCounts& p) {
    json table = json::array();
    for (int i = g.first_vertex(); i <= g.N(); ++i) {
        json row = json::array();
        for (int j = g.first_vertex(); j <= g.N(); ++j) row.push_back(z_str(p(i, j)));
        table.push_back(row);
    }
    return table;
}

json simplex_json(const singgraph::SimplexResult& s) {
    json j = {{"k", s.k}, {"trivial", s.trivial}, {"min", q_str(s.min)}, {"min_ge_1", s.min >= 1}};
    if (s.trivial) return j;
    j["argmin"] = to_json(s.argmin);
    j["argmin_inactive"] = s.argmin_inactive;
    json verts = json::array();
    for (const auto& v : s.vertices)
        verts.push_back({{"inactive", v.inactive}, {"t", to_json(v.t)}, {"objective", q_str(v.objective)},
                         {"feasible", v.feasible}});
    j["vertices"] = verts;
    j["degenerate"] = s.degenerate;
    if (s.distinguished) j["distinguished"] = to_json(*s.distinguished);
    j["distinguished_value"] = q_str(s.distinguished_value);
    j["distinguished_matches_enumeration"] = s.distinguished_matches_enumeration;
    j["optimum_is_distinguished"] = s.optimum_is_distinguished;
    return j;
}

Output cmd_nf_graph(const std::string& path) {
    Output o;
    const json doc = read_json(path);
    bool has_mu = false;
    const auto inst = parse_graph_document(doc, has_mu);
    const auto& g = inst.graph;
    o.inputs = {{"graph", path}, {"N", g.N()}, {"class", singgraph::to_string(g.declared_class())}};
    json r;
    json validity = json::object();
    std::vector<singgraph::GraphClass> classes;
    if (g.first_vertex() == 0) classes = {singgraph::GraphClass::Base0};
    else classes = {singgraph::GraphClass::Weak, singgraph::GraphClass::Prefix, singgraph::GraphClass::BetweenClosed};
    for (auto c : classes) {
        const auto v = singgraph::validate_graph(g, c);
        validity[singgraph::to_string(c)] = {{"valid", v.valid}, {"violations", v.violations}};
    }
    r["validation"] = validity;
    const singgraph::PathCounts p(g);
    json pi = json::array();
    for (int i = g.first_vertex(); i <= g.N(); ++i) pi.push_back(z_str(p.p(i)));
    r["p"] = pi;
    r["path_table"] = path_table_json(g, p);
    const int k = g.prefix_length();
    r["k"] = k;
    mpz_class head = 0;
    for (int i = g.first_vertex() + 1; i <= k; ++i) head += p.p(i);
    r["p_first_equals_prefix_sum"] = head == p.p(g.first_vertex());
    const bool declared_valid = singgraph::validate_graph(g).valid;
    if (has_mu) {
        const auto nf = singgraph::nf_log_inequality(inst);
        r["nf_inequality"] = {{"evaluated", nf.evaluated}, {"weighted", nf.weighted}, {"holds", nf.holds},
                              {"lhs", q_str(nf.lhs)}, {"rhs", q_str(nf.rhs)}, {"violations", nf.violations}};
    }
    if (g.first_vertex() == 1 && declared_valid && g.declared_class() != singgraph::GraphClass::Base0) {
        const auto pr = singgraph::prop52_check(g, g.declared_class());
        r["path_inequality"] = {{"k", pr.k}, {"lhs", z_str(pr.lhs)}, {"rhs", z_str(pr.rhs)}, {"holds", pr.holds},
                                {"equality", pr.equality}};
        if (g.declared_class() != singgraph::GraphClass::Weak || singgraph::validate_graph(g, singgraph::GraphClass::Prefix).valid)
            r["simplex"] = simplex_json(singgraph::simplex_min(g, g.declared_class()));
    }
    if (g.first_vertex() == 0 && inst.delta && inst.L && has_mu) {
        const auto rep = singgraph::section54_chain_check(inst);
        json checks = json::array();
        for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
        r["chain_check"] = {{"outcome", rep.outcome},
                            {"k", rep.k},
                            {"L", rep.L},
                            {"structural_violations", rep.structural_violations},
                            {"checks", checks},
                            {"chain_lhs", rep.chain_lhs ? json(q_str(*rep.chain_lhs)) : json(nullptr)},
                            {"chain_rhs", rep.chain_rhs ? json(q_str(*rep.chain_rhs)) : json(nullptr)},
                            {"final_threshold", q_str(rep.final_threshold)},
                            {"nu_E1_lower", rep.nu_E1_lower ? json(q_str(*rep.nu_E1_lower)) : json(nullptr)},
                            {"final_bound_applicable", rep.final_bound_applicable},
                            {"final_bound_holds", rep.final_bound_holds}};
    }
    o.summary = g.to_string() + (declared_valid ? " valid " : " invalid ") + singgraph::to_string(g.declared_class());
    o.result = std::move(r);
    return o;
}

Output cmd_prop52_scan(int n_max, const std::string& cls_name, int n_min) {
    Output o;
    const auto cls = singgraph::parse_graph_class(cls_name);
    if (cls == singgraph::GraphClass::Base0) throw InputError("scan needs weak, prefix or between-closed");
    if (n_max > singgraph::GraphEnumerator::kMaxN) throw InputError("--N is limited to 12");
    o.inputs = {{"N", n_max}, {"min_N", n_min}, {"class", cls_name}};
    json per = json::array();
    std::uint64_t graphs = 0, violations = 0, equalities = 0;
    bool chains_equal = true;
    json first_violation = nullptr;
    for (int N = n_min; N <= n_max; ++N) {
        singgraph::GraphEnumerator en(N, cls);
        singgraph::ResolutionGraph g;
        std::uint64_t count = 0, bad = 0, eq = 0;
        while (en.next(g)) {
            const auto r = singgraph::prop52_check(g, cls);
            ++count;
            if (!r.holds) {
                ++bad;
                if (first_violation.is_null()) first_violation = g.to_string();
            }
            if (r.equality) ++eq;
        }
        const auto chain = singgraph::prop52_check(singgraph::ResolutionGraph::chain(N, cls), cls);
        chains_equal = chains_equal && chain.equality;
        per.push_back({{"N", N}, {"graphs", count}, {"violations", bad}, {"equalities", eq},
                       {"chain_equality", chain.equality}});
        graphs += count;
        violations += bad;
        equalities += eq;
    }
    o.result = {{"graphs", graphs},         {"violations", violations},
                {"equalities", equalities}, {"chains_attain_equality", chains_equal},
                {"per_N", per},             {"first_violation", first_violation}};
    if (cls == singgraph::GraphClass::Weak && violations > 0)
        o.warnings.push_back("weak-class violation found: the inequality needs the prefix structure");
    o.summary = std::to_string(graphs) + " graphs, " + std::to_string(violations) + " violations";
    return o;
}

Output cmd_lp_min(const std::string& graph_path, int scan_n, const std::string& cls_name) {
    Output o;
    if (!graph_path.empty()) {
        const json doc = read_json(graph_path);
        bool has_mu = false;
        const auto inst = parse_graph_document(doc, has_mu);
        o.inputs = {{"graph", graph_path}};
        const auto s = singgraph::simplex_min(inst.graph, inst.graph.declared_class());
        o.result = simplex_json(s);
        o.summary = "min " + q_str(s.min);
        return o;
    }
    if (scan_n < 2) throw InputError("give --graph or --scan N with N >= 2");
    const auto cls = singgraph::parse_graph_class(cls_name);
    o.inputs = {{"scan", scan_n}, {"class", cls_name}};
    json per = json::array();
    std::uint64_t total = 0, below = 0, mismatched = 0, distinguished_opt = 0;
    bool chains_one = true;
    mpq_class overall_min = -1;
    for (int N = 2; N <= scan_n; ++N) {
        singgraph::GraphEnumerator en(N, cls);
        singgraph::ResolutionGraph g;
        std::uint64_t count = 0, bad = 0;
        mpq_class nmin = -1;
        while (en.next(g)) {
            const auto s = singgraph::simplex_min(g, cls);
            ++count;
            if (s.min < 1) ++bad;
            if (!s.trivial && !s.distinguished_matches_enumeration) ++mismatched;
            if (!s.trivial && s.optimum_is_distinguished) ++distinguished_opt;
            if (nmin < 0 || s.min < nmin) nmin = s.min;
        }
        const auto chain = singgraph::simplex_min(singgraph::ResolutionGraph::chain(N, cls), cls);
        chains_one = chains_one && chain.min == 1;
        per.push_back({{"N", N}, {"graphs", count}, {"below_one", bad}, {"min", q_str(nmin)}});
        total += count;
        below += bad;
        if (overall_min < 0 || nmin < overall_min) overall_min = nmin;
    }
    o.result = {{"graphs", total},
                {"below_one", below},
                {"min", q_str(overall_min)},
                {"chains_equal_one", chains_one},
                {"distinguished_mismatches", mismatched},
                {"optimum_at_distinguished", distinguished_opt},
                {"per_N", per}};
    o.summary = std::to_string(total) + " graphs, minimum " + q_str(overall_min);
    return o;
}

Output cmd_local_bounds(const std::string& nu, const std::string& mu, const std::string& n, const std::string& nu_r,
                        const std::string& mu_r) {
    Output o;
    std::optional<mpq_class> nr, mr;
    if (!nu_r.empty()) nr = parse_rational(nu_r);
    if (!mu_r.empty()) mr = parse_rational(mu_r);
    const auto b = bounds::local_bounds(parse_rational(nu), parse_rational(mu), parse_rational(n), nr, mr);
    o.inputs = {{"nu", q_str(b.nu)}, {"mu", q_str(b.mu)}, {"n", q_str(b.n)}};
    if (nr) o.inputs["nu_R"] = q_str(*nr), o.inputs["mu_R"] = q_str(*mr);
    o.result = {{"mult_lower", q_str(b.theorem34_lower)},
                {"nu_R_lower", q_str(b.nu_R_lower)},
                {"second_stage", {{"nu_R", q_str(b.nu_R)}, {"mu_R", q_str(b.mu_R)}, {"induced", b.second_stage_induced}}},
                {"nu_Z_lower", q_str(b.nu_Z_lower)},
                {"flags",
                 {{"nu_gt_n", b.flags.nu_gt_n},
                  {"mu_gt_n", b.flags.mu_gt_n},
                  {"nu_le_3n/2", b.flags.nu_le_3n_2},
                  {"nu_R_gt_4n/3", b.flags.nu_R_gt_4n_3},
                  {"nu_Z_gt_14n/9", b.flags.nu_Z_gt_14n_9},
                  {"nu_Z_gt_3n/2", b.flags.nu_Z_gt_3n_2}}}};
    o.summary = "nu_R >= " + q_str(b.nu_R_lower) + ", nu_Z >= " + q_str(b.nu_Z_lower);
    return o;
}

Output cmd_dim(const std::string& path, const std::string& method, unsigned extensions, std::uint64_t count_prime,
               const GlobalOptions& g) {
    Output o;
    const auto in = read_text_input(path, g.prime);
    const auto gens = parse_polynomials(in);
    o.inputs = {{"ideal", path}, {"field", in.field.to_string()}, {"generators", gens.size()}, {"method", method}};
    if (method != "groebner" && method != "points" && method != "both")
        throw InputError("unknown method '" + method + "' (groebner, points, both)");
    json r;
    if (method != "points") {
        const auto d = projective_dimension(gens, groebner_options(g));
        r["groebner"] = {{"status", d.status == DimensionStatus::Ok ? "ok" : "budget"},
                         {"proj_dim", d.proj_dim},
                         {"leading_monomials", d.certificate.leading_monomials},
                         {"independent_set", d.certificate.independent_set},
                         {"reductions", d.reductions},
                         {"notes", d.notes}};
        if (d.status == DimensionStatus::Budget) o.exit_code = 2;
        o.summary = d.status == DimensionStatus::Ok ? "dim " + std::to_string(d.proj_dim) : "budget exceeded";
    }
    if (method != "groebner") {
        std::uint64_t p = count_prime;
        if (p == 0) p = in.field.is_prime() ? in.field.characteristic() : 7;
        const auto pc = dimension_by_point_count(gens, p, extensions);
        r["points"] = {{"p", pc.p}, {"counts", pc.counts}, {"dimension_estimate", pc.dimension_estimate}};
        o.warnings.push_back("point-count dimension is an estimate");
        if (method == "points") o.summary = "estimated dim " + std::to_string(pc.dimension_estimate);
    }
    o.result = std::move(r);
    return o;
}

Output cmd_batch(const std::string& manifest, const std::string& out_dir, unsigned jobs, const GlobalOptions& g) {
    Output o;
    o.uses_seed = true;
    o.inputs = {{"manifest", manifest}, {"out", out_dir}, {"jobs", jobs}};
    o.result = run_batch(manifest, out_dir, jobs, g);
    o.summary = o.result["summary"].dump();
    return o;
}

json make_report(const std::string& command, const std::vector<std::string>& args, const Output& o,
                 const GlobalOptions& g) {
    json rep;
    rep["command"] = command;
    rep["invocation"] = args;
    rep["inputs"] = o.inputs;
    rep["result"] = o.result;
    rep["warnings"] = warnings_json(o.warnings);
    if (o.uses_seed) rep["seed"] = g.seed;
    return rep;
}

}  // namespace

json to_json(const RegularityReport& r) {
    json clauses = json::array();
    for (const auto& c : r.clauses)
        clauses.push_back({{"clause", c.clause}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    json witness = nullptr;
    if (r.witness) {
        witness = {{"clause", r.witness->clause}, {"detail", r.witness->detail}};
        witness["subspace"] = r.witness->subspace ? to_json(*r.witness->subspace) : json(nullptr);
        witness["sample"] = r.witness->sample ? json(*r.witness->sample) : json(nullptr);
    }
    return {{"verdict", to_string(r.verdict)}, {"condition", r.condition}, {"clauses", clauses},
            {"witness", witness},               {"samples", r.samples},     {"seed", r.seed},
            {"budget_notes", r.budget_notes},   {"notes", r.notes}};
}

RegularityOutcome run_regularity(const RegularityRequest& req, const GlobalOptions& g) {
    json inputs;
    const PointContext ctx = load_context(req.pair.string(), req.point, g, inputs);
    CheckMode mode = CheckMode::refute(req.samples, g.seed);
    if (req.subspace) {
        const auto in = read_text_input(*req.subspace, ctx.field().is_prime()
                                                           ? std::optional<std::uint64_t>(ctx.field().characteristic())
                                                           : std::nullopt);
        if (in.field != ctx.field()) throw InputError("subspace field differs from the pair's field");
        mode = CheckMode::single(parse_subspace(in, ctx.field(), ctx.n_affine()));
        mode.seed = g.seed;
    }
    mode.groebner = groebner_options(g);
    mode.irreducibility_advisory = req.advisory;
    const PointClass cls = classify_point(ctx);
    RegularityReport rep;
    if (req.condition == "auto") rep = check_regularity(ctx, mode);
    else if (req.condition == "R1") rep = check_R1(ctx, mode);
    else if (req.condition == "R2") rep = check_R2(ctx, mode);
    else if (req.condition == "R2^2") rep = check_R22(ctx, mode);
    else throw InputError("unknown condition '" + req.condition + "' (auto, R1, R2, R2^2)");
    RegularityOutcome out;
    out.verdict = rep.verdict;
    out.result = inputs;
    out.result["M"] = ctx.pair.fibre_dim();
    out.result["chart"] = ctx.chart;
    out.result["point_kind"] = to_string(cls.kind);
    out.result["mode"] = req.subspace ? "single" : "refute";
    out.result["report"] = to_json(rep);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification toolkit for codimension-two complete intersections", "ci2"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    std::uint64_t prime = 0;
    app.add_option("--seed", g.seed, "Seed for sampled checks");
    auto* prime_opt = app.add_option("--prime", prime, "Work over F_p (odd prime < 2^61)");
    app.add_option("--budget", g.budget, "Reduction budget for Groebner computations");

    std::function<Output()> action;
    std::string command;
    auto sub = [&](const char* name, const char* desc) {
        auto* s = app.add_subcommand(name, desc);
        s->callback([&command, name] { command = name; });
        return s;
    };

    std::string file;
    auto* rank = sub("rank", "Rank of a matrix");
    rank->add_option("file,--matrix", file, "Matrix file")->required();

    std::string semantics = "default";
    std::size_t n_vars = 0;
    std::uint64_t max_points = 20'000'000;
    auto* pencil = sub("pencil-rank", "Minimal rank in a pencil or set of quadratic forms");
    pencil->add_option("file,--forms", file, "Quadratic forms, one per line")->required();
    pencil->add_option("--semantics", semantics, "default, closure or rational");
    pencil->add_option("--n", n_vars, "Number of variables");
    pencil->add_option("--max-points", max_points, "Enumeration budget for three or more forms");

    std::string pair_path, point, type, condition = "auto", subspace, witness_out;
    unsigned samples = 20;
    bool no_advisory = false;
    auto* classify = sub("classify-point", "Classify a point of the complete intersection");
    classify->add_option("--pair", pair_path, "Pair file")->required();
    classify->add_option("--point", point, "Homogeneous coordinates")->required();
    classify->add_option("--type", type, "Check singularity type r1,r2");

    auto* reg = sub("check-regularity", "Check the regularity conditions at a point");
    reg->add_option("--pair", pair_path, "Pair file")->required();
    reg->add_option("--point", point, "Homogeneous coordinates")->required();
    reg->add_option("--condition", condition, "auto, R1, R2 or R2^2");
    reg->add_option("--samples", samples, "Random subspaces per clause");
    reg->add_option("--subspace", subspace, "Check exactly on this subspace (basis file)");
    reg->add_option("--witness-out", witness_out, "Write a failing subspace as a basis file");
    reg->add_flag("--no-advisory", no_advisory, "Skip the irreducibility advisory");

    std::optional<long> M;
    std::optional<unsigned> d1, d2;
    auto* codim = sub("codim-bounds", "Closed-form codimension estimates");
    codim->add_option("--M", M);
    codim->add_option("--d1", d1);
    codim->add_option("--d2", d2);

    fibration::FibrationSpec spec;
    bool grid = false;
    fibration::GridRange range;
    unsigned threads = 0;
    auto* fib = sub("fibration-check", "Superrigidity criterion for fibrations over P^m");
    fib->add_option("--m", spec.m);
    fib->add_option("--d1", spec.d1);
    fib->add_option("--d2", spec.d2);
    fib->add_option("--l1", spec.l1);
    fib->add_option("--l2", spec.l2);
    fib->add_flag("--grid", grid, "Sweep the parameter grid");
    fib->add_option("--m-max", range.m_max);
    fib->add_option("--l-max", range.l_max);
    fib->add_option("--d-max", range.d_max);
    fib->add_option("--threads", threads);

    auto* nf = sub("nf-graph", "Path counts and inequalities for a resolution graph");
    nf->add_option("file,--graph", file, "Graph document (JSON)")->required();

    int scan_n = 0, min_n = 2;
    std::string cls_name = "prefix";
    auto* scan = sub("prop52-scan", "Exhaustive scan of the path-count inequality");
    scan->add_option("--N", scan_n, "Largest vertex count")->required();
    scan->add_option("--min-N", min_n, "Smallest vertex count");
    scan->add_option("--class", cls_name, "weak, prefix or between-closed");

    auto* lp = sub("lp-min", "Exact simplex minimum for a graph or a class scan");
    lp->add_option("--graph", file, "Graph document (JSON)");
    lp->add_option("--scan", scan_n, "Scan all graphs up to N vertices");
    lp->add_option("--class", cls_name, "Class for --scan");

    std::string nu, mu, n, nu_r, mu_r;
    auto* local = sub("local-bounds", "Local multiplicity chain bounds");
    local->add_option("--nu", nu)->required();
    local->add_option("--mu", mu)->required();
    local->add_option("--n", n)->required();
    local->add_option("--nu-R", nu_r);
    local->add_option("--mu-R", mu_r);

    std::string method = "groebner";
    unsigned extensions = 2;
    std::uint64_t count_prime = 0;
    auto* dim = sub("dim", "Projective dimension of a homogeneous ideal");
    dim->add_option("file,--ideal", file, "Generators, one per line")->required();
    dim->add_option("--method", method, "groebner, points or both");
    dim->add_option("--extensions", extensions, "Field extensions for point counting");
    dim->add_option("--count-prime", count_prime, "Prime for point counting");

    std::string manifest, out_dir = "batch_out";
    unsigned jobs = 0;
    auto* batch = sub("batch", "Run check-regularity over a manifest");
    batch->add_option("file,--manifest", manifest, "Manifest (JSON array)")->required();
    batch->add_option("--out", out_dir, "Output directory");
    batch->add_option("--jobs", jobs, "Parallel workers");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    auto emit_error = [&](const std::string& kind, const std::string& msg) {
        json rep = {{"command", command}, {"invocation", args}, {"error", {{"kind", kind}, {"message", msg}}}};
        out << rep.dump(2) << "\n";
        err << "ci2 " << command << ": " << msg << "\n";
    };
    try {
        if (*prime_opt) {
            if (prime == 2 || !is_prime_u64(prime) || prime >= (std::uint64_t{1} << 61))
                throw InputError("--prime must be an odd prime below 2^61");
            g.prime = prime;
        }
        Output o;
        if (command == "rank") o = cmd_rank(file, g);
        else if (command == "pencil-rank")
            o = cmd_pencil_rank(file, semantics, n_vars ? std::optional<std::size_t>(n_vars) : std::nullopt,
                                max_points, g);
        else if (command == "classify-point") o = cmd_classify(pair_path, point, type, g);
        else if (command == "check-regularity") {
            RegularityRequest req;
            req.pair = pair_path;
            req.point = point;
            req.condition = condition;
            req.samples = samples;
            if (!subspace.empty()) req.subspace = subspace;
            req.advisory = !no_advisory;
            o = cmd_check_regularity(req, witness_out, g);
        } else if (command == "codim-bounds") o = cmd_codim_bounds(M, d1, d2);
        else if (command == "fibration-check") o = cmd_fibration(spec, grid, range, threads);
        else if (command == "nf-graph") o = cmd_nf_graph(file);
        else if (command == "prop52-scan") o = cmd_prop52_scan(scan_n, cls_name, min_n);
        else if (command == "lp-min") o = cmd_lp_min(file, scan_n, cls_name);
        else if (command == "local-bounds") o = cmd_local_bounds(nu, mu, n, nu_r, mu_r);
        else if (command == "dim") o = cmd_dim(file, method, extensions, count_prime, g);
        else if (command == "batch") o = cmd_batch(manifest, out_dir, jobs, g);
        else throw InputError("unknown command");
        out << make_report(command, args, o, g).dump(2) << "\n";
        err << "ci2 " << command << ": " << o.summary << "\n";
        for (const auto& w : o.warnings) err << "warning: " << w << "\n";
        return o.exit_code;
    } catch (const BudgetExceeded& e) {
        emit_error("budget", e.what());
        return 2;
    } catch (const InputError& e) {
        emit_error("input", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        emit_error("input", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        emit_error("input", e.what());
        return 1;
    } catch (const json::exception& e) {
        emit_error("input", e.what());
        return 1;
    }
}

}  // namespace ci2::cli

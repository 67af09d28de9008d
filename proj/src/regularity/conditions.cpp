#include "ci2/regularity/conditions.hpp"

#include "ci2/error.hpp"
#include "ci2/zerodim/dimension.hpp"
#include "ci2/zerodim/point_count.hpp"

#include <random>

namespace ci2 {

namespace {

std::string seq_name(std::size_t truncate) { return "S[-" + std::to_string(truncate) + "]"; }

std::mt19937_64 sample_rng(std::uint64_t seed, unsigned sample, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

Verdict aggregate(const std::vector<ClauseResult>& clauses) {
    bool budget = false, all_vacuous = !clauses.empty();
    for (const auto& c : clauses) {
        if (c.verdict == Verdict::Fail) return Verdict::Fail;
        if (c.verdict == Verdict::Budget) budget = true;
        if (c.verdict != Verdict::Vacuous) all_vacuous = false;
    }
    if (budget) return Verdict::Budget;
    return all_vacuous ? Verdict::Vacuous : Verdict::PassSampled;
}

// Evaluate `check` on the single subspace or on `samples` random subspaces of
// `parent` with codimension `codim`, stopping at the first failure.
template <class Check>
void run_quantified(RegularityReport& report, const CheckMode& mode, const LinearSubspace& parent, std::size_t codim,
                    std::uint64_t stream, const std::string& clause, Check check) {
    if (mode.kind == CheckMode::Kind::Single) {
        const LinearSubspace& l = *mode.subspace;
        ClauseResult r = check(l);
        r.clause = clause;
        if (r.verdict == Verdict::Fail && !report.witness) report.witness = RegularityWitness{clause, l, r.detail, {}};
        if (r.verdict == Verdict::Budget) report.budget_notes.push_back(clause + ": " + r.detail);
        if (r.verdict == Verdict::PassSampled) r.detail += " (exact for the supplied subspace)";
        report.clauses.push_back(std::move(r));
        return;
    }
    ClauseResult agg{clause, Verdict::PassSampled, ""};
    unsigned passed = 0, budget = 0;
    for (unsigned s = 0; s < mode.samples; ++s) {
        auto rng = sample_rng(mode.seed, s, stream);
        const LinearSubspace l = LinearSubspace::random_in(parent, codim, rng);
        ClauseResult r = check(l);
        if (r.verdict == Verdict::Vacuous) {
            agg = r;
            agg.clause = clause;
            break;
        }
        if (r.verdict == Verdict::Budget) {
            ++budget;
            report.budget_notes.push_back(clause + " sample " + std::to_string(s) + ": " + r.detail);
            continue;
        }
        if (r.verdict == Verdict::Fail) {
            agg.verdict = Verdict::Fail;
            agg.detail = "sample " + std::to_string(s) + ": " + r.detail;
            if (!report.witness) report.witness = RegularityWitness{clause, l, r.detail, s};
            break;
        }
        ++passed;
    }
    if (agg.verdict == Verdict::PassSampled) {
        if (budget > 0 && passed == 0) agg.verdict = Verdict::Budget;
        else if (budget > 0) agg.verdict = Verdict::Budget;
        agg.detail = std::to_string(passed) + " of " + std::to_string(mode.samples) + " sampled subspaces regular";
        if (budget) agg.detail += ", " + std::to_string(budget) + " over budget";
    }
    report.clauses.push_back(std::move(agg));
}

void require_single_subspace(const CheckMode& mode, const LinearSubspace& parent, std::vector<std::size_t> codims,
                             const char* what) {
    if (mode.kind != CheckMode::Kind::Single) return;
    if (!mode.subspace) throw InputError("single mode needs a subspace");
    const LinearSubspace& l = *mode.subspace;
    if (l.ambient_dim() != parent.ambient_dim()) throw InputError("subspace is not in the chart coordinates");
    if (!parent.contains(l)) throw InputError(std::string("subspace is not contained in ") + what);
    for (auto c : codims)
        if (parent.dim() >= c && l.dim() == parent.dim() - c) return;
    throw InputError(std::string("subspace has the wrong codimension in ") + what);
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PassSampled: return "pass-sampled";
        case Verdict::Fail: return "fail";
        case Verdict::Vacuous: return "vacuous";
        case Verdict::Budget: break;
    }
    return "budget";
}

ClauseResult check_sequence_on(const PointContext& ctx, std::size_t truncate, const LinearSubspace& subspace,
                               const std::string& clause, const GroebnerOptions& options) {
    ClauseResult r{clause, Verdict::PassSampled, ""};
    const std::size_t length = sequence_order(ctx.pair.d1, ctx.pair.d2).size();
    const std::size_t remaining = truncate >= length ? 0 : length - truncate;
    if (remaining < 2) {
        r.verdict = Verdict::Vacuous;
        r.detail = seq_name(truncate) + " keeps " + std::to_string(remaining) + " of " + std::to_string(length) +
                   " entries";
        return r;
    }
    const HypertangentSequence seq = restrict_sequence(ctx, truncate, subspace);
    const long ambient = static_cast<long>(subspace.dim()) - 1;
    const RegularSequenceResult reg = is_regular_sequence(seq.forms(), ambient, options);
    if (reg.status == DimensionStatus::Budget) {
        r.verdict = Verdict::Budget;
        r.detail = reg.notes.empty() ? "budget exceeded" : reg.notes.front();
        return r;
    }
    r.detail = seq_name(truncate) + "|_L on P^" + std::to_string(ambient) + ": dimension " +
               std::to_string(reg.proj_dim) + ", regular value " + std::to_string(reg.expected_dim);
    r.verdict = reg.regular ? Verdict::PassSampled : Verdict::Fail;
    return r;
}

RegularityReport check_R1(const PointContext& ctx, const CheckMode& mode) {
    const PointClass cls = classify_point(ctx);
    if (cls.kind != PointKind::Nonsingular) throw InputError("(R1) needs a nonsingular point");
    const LinearSubspace tangent = ctx.tangent_space();
    require_single_subspace(mode, tangent, {2}, "{f_{1,1} = f_{2,1} = 0}");
    RegularityReport report;
    report.condition = "R1";
    report.seed = mode.seed;
    report.samples = mode.kind == CheckMode::Kind::Single ? 1 : mode.samples;
    if (tangent.dim() < 2) {
        report.clauses.push_back({"R1:S[-5]", Verdict::Vacuous, "tangent space too small"});
    } else {
        run_quantified(report, mode, tangent, 2, 1, "R1:S[-5]", [&](const LinearSubspace& l) {
            return check_sequence_on(ctx, 5, l, "R1:S[-5]", mode.groebner);
        });
    }
    report.verdict = aggregate(report.clauses);
    return report;
}

RegularityReport check_R2(const PointContext& ctx, const CheckMode& mode) {
    const PointClass cls = classify_point(ctx);
    if (cls.kind != PointKind::Quadratic) throw InputError("(R2) needs a quadratic point");
    RegularityReport report;
    report.condition = "R2";
    report.seed = mode.seed;
    report.samples = mode.kind == CheckMode::Kind::Single ? 1 : mode.samples;
    const std::size_t rank = cls.pencil_form.rank();
    ClauseResult rank_clause{"R2:rank", rank >= 9 ? Verdict::PassSampled : Verdict::Fail,
                             "rank of (a2 f_{1,2} - a1 f_{2,2})|_{tau=0} is " + std::to_string(rank) +
                                 (rank >= 9 ? " >= 9 (exact)" : " < 9")};
    report.clauses.push_back(rank_clause);
    if (rank < 9) {
        report.witness = RegularityWitness{"R2:rank", std::nullopt, rank_clause.detail, std::nullopt};
        report.verdict = Verdict::Fail;
        return report;
    }
    require_single_subspace(mode, cls.tau_hyperplane, {1}, "{tau = 0}");
    run_quantified(report, mode, cls.tau_hyperplane, 1, 2, "R2:S[-4]", [&](const LinearSubspace& l) {
        return check_sequence_on(ctx, 4, l, "R2:S[-4]", mode.groebner);
    });
    if (report.clauses.back().verdict == Verdict::Vacuous) report.notes.push_back("sequence clause vacuous at this M");
    report.verdict = aggregate(report.clauses);
    return report;
}

std::vector<std::pair<std::string, Polynomial>> r22_system(const PointContext& ctx, const LinearSubspace& subspace) {
    const unsigned d1 = ctx.pair.d1, d2 = ctx.pair.d2;
    std::vector<std::pair<int, unsigned>> idx;
    if (d1 >= 4) {
        idx = {{1, 2}, {2, 2}, {1, d1}, {2, d2}};
    } else if (d1 == 3) {
        idx = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, d2}};
    } else {
        idx = {{1, 2}, {2, 2}, {2, 3}, {2, d2}};
    }
    std::vector<std::pair<std::string, Polynomial>> out;
    for (const auto& [i, j] : idx) {
        if (j > (i == 1 ? d1 : d2)) continue;
        out.emplace_back("f_{" + std::to_string(i) + "," + std::to_string(j) + "}",
                         restrict_to_subspace(ctx.f(i, j), subspace));
    }
    return out;
}

RegularityReport check_R22(const PointContext& ctx, const CheckMode& mode) {
    const PointClass cls = classify_point(ctx);
    if (cls.kind != PointKind::BiQuadratic) throw InputError("(R2^2) needs a bi-quadratic point");
    RegularityReport report;
    report.condition = "R2^2";
    report.seed = mode.seed;
    report.samples = mode.kind == CheckMode::Kind::Single ? 1 : mode.samples;

    const std::size_t set_rank = pencil_min_rank(cls.q1, cls.q2, PencilSemantics::AlgebraicClosure);
    const std::size_t max_rank = std::max(cls.q1.rank(), cls.q2.rank());
    const bool c1 = set_rank >= 13 && max_rank >= 18;
    ClauseResult clause1{"R2^2.1", c1 ? Verdict::PassSampled : Verdict::Fail,
                         "rk(f_{1,2}, f_{2,2}) = " + std::to_string(set_rank) + (set_rank >= 13 ? " >= 13" : " < 13") +
                             ", max(rank f_{1,2}, rank f_{2,2}) = " + std::to_string(max_rank) +
                             (max_rank >= 18 ? " >= 18" : " < 18")};
    report.clauses.push_back(clause1);
    if (!c1) {
        report.witness = RegularityWitness{"R2^2.1", std::nullopt, clause1.detail, std::nullopt};
        report.notes.push_back("clauses R2^2.2 and R2^2.3 not evaluated after R2^2.1 failed");
        report.verdict = Verdict::Fail;
        return report;
    }

    const LinearSubspace chart = LinearSubspace::whole(ctx.field(), ctx.n_affine());
    require_single_subspace(mode, chart, {2, 3}, "the chart");
    const bool single = mode.kind == CheckMode::Kind::Single;
    const std::size_t single_codim = single ? mode.subspace->codim() : 0;
    const unsigned d1 = ctx.pair.d1;

    if (!single || single_codim == 2) {
        std::uint64_t advisory_trial = 0;
        run_quantified(report, mode, chart, 2, 3, "R2^2.2", [&](const LinearSubspace& l) {
            const auto system = r22_system(ctx, l);
            std::vector<Polynomial> forms;
            for (const auto& [name, f] : system) forms.push_back(f);
            const long ambient = static_cast<long>(l.dim()) - 1;
            const long expected = ambient - static_cast<long>(forms.size());
            ClauseResult r{"R2^2.2", Verdict::PassSampled, ""};
            const DimensionResult d = projective_dimension(forms, mode.groebner);
            if (d.status == DimensionStatus::Budget) {
                r.verdict = Verdict::Budget;
                r.detail = d.notes.empty() ? "budget exceeded" : d.notes.front();
                return r;
            }
            r.detail = std::to_string(forms.size()) + "-form system on P^" + std::to_string(ambient) +
                       ": dimension " + std::to_string(d.proj_dim) + ", complete-intersection value " +
                       std::to_string(expected);
            if (d.proj_dim != expected) {
                r.verdict = Verdict::Fail;
                return r;
            }
            if (mode.irreducibility_advisory && advisory_trial++ == 0) {
                std::mt19937_64 rng = sample_rng(mode.seed, 0, 7);
                IrreducibilityOptions opts;
                opts.groebner = mode.groebner;
                const auto adv = irreducibility_advisory(forms, d.proj_dim, opts, rng);
                report.notes.push_back("R2^2.2 irreducibility advisory (first subspace): " + to_string(adv.verdict) +
                                       ", " + adv.reason);
            }
            return r;
        });
    }
    for (std::size_t c : {std::size_t{2}, std::size_t{3}}) {
        if (single && single_codim != c) continue;
        const std::size_t truncate = d1 >= 4 ? c + 1 : c;
        const std::string name = "R2^2.3:codim" + std::to_string(c) + ":" + seq_name(truncate);
        run_quantified(report, mode, chart, c, 3 + c, name, [&](const LinearSubspace& l) {
            return check_sequence_on(ctx, truncate, l, name, mode.groebner);
        });
    }
    report.verdict = aggregate(report.clauses);
    return report;
}

RegularityReport check_regularity(const PointContext& ctx, const CheckMode& mode) {
    switch (classify_point(ctx).kind) {
        case PointKind::Nonsingular: return check_R1(ctx, mode);
        case PointKind::Quadratic: return check_R2(ctx, mode);
        case PointKind::BiQuadratic: break;
    }
    return check_R22(ctx, mode);
}

}  // namespace ci2

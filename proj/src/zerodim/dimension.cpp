#include "ci2/zerodim/dimension.hpp"

#include "ci2/error.hpp"

#include <algorithm>
#include <bit>

namespace ci2 {

namespace {

// Smallest hitting set of the supports by branch and bound.
void hit(const std::vector<std::uint64_t>& supports, std::uint64_t chosen, std::size_t size, std::size_t& best,
         std::uint64_t& best_set) {
    if (size >= best) return;
    const std::uint64_t* unhit = nullptr;
    for (const auto& s : supports) {
        if ((s & chosen) == 0) {
            unhit = &s;
            break;
        }
    }
    if (!unhit) {
        best = size;
        best_set = chosen;
        return;
    }
    for (std::uint64_t rest = *unhit; rest; rest &= rest - 1) {
        const std::uint64_t bit = rest & (~rest + 1);
        hit(supports, chosen | bit, size + 1, best, best_set);
    }
}

void validate_homogeneous(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        if (!g.is_homogeneous()) throw InputError("projective dimension needs homogeneous generators: " + g.to_string());
}

DimensionResult dimension_from_basis(const std::vector<Polynomial>& basis, std::size_t n) {
    DimensionResult r;
    std::vector<std::uint64_t> supports;
    for (const auto& g : basis) {
        const Term& t = g.leading_term();
        r.certificate.leading_monomials.push_back(Polynomial::monomial(g.field(), t.exp, Scalar::one(g.field())).to_string());
        std::uint64_t m = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (t.exp[v]) m |= std::uint64_t{1} << v;
        supports.push_back(m);
    }
    if (std::find(supports.begin(), supports.end(), 0) != supports.end()) {
        r.proj_dim = -1;
        return r;
    }
    const std::size_t indep = max_independent_set(n, supports, &r.certificate.independent_set);
    r.proj_dim = static_cast<long>(indep) - 1;
    return r;
}

}  // namespace

std::size_t max_independent_set(std::size_t n, const std::vector<std::uint64_t>& supports,
                                std::vector<std::size_t>* witness) {
    if (std::find(supports.begin(), supports.end(), 0) != supports.end())
        throw std::invalid_argument("empty support: no independent set exists");
    std::vector<std::uint64_t> minimal;
    for (auto s : supports) {
        bool dominated = false;
        for (auto t : supports)
            if (t != s && (t & s) == t) dominated = true;
        if (!dominated && std::find(minimal.begin(), minimal.end(), s) == minimal.end()) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    std::size_t best = n + 1;
    std::uint64_t best_set = 0;
    hit(minimal, 0, 0, best, best_set);
    if (witness) {
        witness->clear();
        for (std::size_t v = 0; v < n; ++v)
            if (!((best_set >> v) & 1)) witness->push_back(v);
    }
    return n - best;
}

std::vector<Polynomial> reduce_mod_p(const std::vector<Polynomial>& gens, std::uint64_t p) {
    const Field fp = Field::prime(p);
    std::vector<Polynomial> out;
    for (const auto& g : gens) {
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            const Scalar c = g.field().is_rational() ? Scalar(fp, t.coeff.rational())
                                                     : Scalar::from_residue(fp, t.coeff.residue());
            terms.push_back({t.exp, t.degree, c});
        }
        out.push_back(Polynomial::from_terms(fp, g.n_vars(), std::move(terms)));
    }
    return out;
}

DimensionResult projective_dimension(const std::vector<Polynomial>& gens, const GroebnerOptions& options) {
    validate_homogeneous(gens);
    if (gens.empty()) throw InputError("an ideal needs at least one generator");
    const std::size_t n = gens.front().n_vars();
    const GroebnerResult gb = groebner_basis(gens, options);
    if (gb.status == GroebnerStatus::Budget) {
        DimensionResult r;
        r.status = DimensionStatus::Budget;
        r.reductions = gb.reductions;
        r.notes.push_back(gb.budget_note);
        return r;
    }
    DimensionResult r = dimension_from_basis(gb.basis, n);
    if (gb.basis.empty()) r.proj_dim = static_cast<long>(n) - 1;
    r.reductions = gb.reductions;

    const Field field = gens.front().field();
    if (field.is_rational() && gb.reductions > options.max_reductions / 2) {
        std::vector<long> mods;
        for (std::uint64_t p : kCrossCheckPrimes) {
            if (mods.size() == 2 && mods[0] == mods[1]) break;
            try {
                const auto gp = reduce_mod_p(gens, p);
                const DimensionResult rp = projective_dimension(gp, options);
                if (rp.status == DimensionStatus::Budget) {
                    r.notes.push_back("cross-check mod " + std::to_string(p) + " ran out of budget");
                    continue;
                }
                mods.push_back(rp.proj_dim);
                r.notes.push_back("dimension mod " + std::to_string(p) + " = " + std::to_string(rp.proj_dim));
            } catch (const InputError&) {
                r.notes.push_back("prime " + std::to_string(p) + " divides a denominator; skipped");
            }
        }
        for (long d : mods)
            if (d != r.proj_dim) r.notes.push_back("warning: modular dimension disagrees with the rational one");
    }
    return r;
}

RegularSequenceResult is_regular_sequence(const std::vector<Polynomial>& gens, long ambient_proj_dim,
                                          const GroebnerOptions& options) {
    RegularSequenceResult r;
    r.expected_dim = ambient_proj_dim - static_cast<long>(gens.size());
    if (gens.empty()) {
        r.proj_dim = ambient_proj_dim;
        r.regular = true;
        return r;
    }
    if (static_cast<long>(gens.front().n_vars()) != ambient_proj_dim + 1)
        throw InputError("generators do not live on P^" + std::to_string(ambient_proj_dim));
    const DimensionResult d = projective_dimension(gens, options);
    r.notes = d.notes;
    if (d.status == DimensionStatus::Budget) {
        r.status = DimensionStatus::Budget;
        return r;
    }
    r.proj_dim = d.proj_dim;
    r.regular = r.expected_dim >= -1 && d.proj_dim == r.expected_dim;
    return r;
}

}  // namespace ci2

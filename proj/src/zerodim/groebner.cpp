#include "ci2/zerodim/groebner.hpp"

#include "ci2/error.hpp"

#include <algorithm>

namespace ci2 {

namespace {

struct Lead {
    Exponents exp;
    unsigned degree = 0;
    std::uint64_t mask = 0;
};

Lead lead_of(const Polynomial& p) {
    const Term& t = p.leading_term();
    Lead l{t.exp, t.degree, 0};
    for (std::size_t v = 0; v < t.exp.size(); ++v)
        if (t.exp[v]) l.mask |= std::uint64_t{1} << v;
    return l;
}

bool divides(const Lead& a, const Exponents& b, std::uint64_t b_mask) {
    if ((a.mask & ~b_mask) != 0) return false;
    for (std::size_t v = 0; v < b.size(); ++v)
        if (a.exp[v] > b[v]) return false;
    return true;
}

bool divides_exp(const Exponents& a, const Exponents& b) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] > b[v]) return false;
    return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
    Exponents l(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) l[v] = std::max(a[v], b[v]);
    return l;
}

bool coprime(const Lead& a, const Lead& b) { return (a.mask & b.mask) == 0; }

std::uint64_t mask_of(const Exponents& e) {
    std::uint64_t m = 0;
    for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) m |= std::uint64_t{1} << v;
    return m;
}

struct Pair {
    std::size_t i, j;
    Exponents lcm;
    unsigned degree;
};

class Reducer {
public:
    Reducer(std::uint64_t budget, std::uint64_t& steps) : budget_(budget), steps_(steps) {}

    // Full reduction of p by the polynomials in `basis` selected by `active`.
    Polynomial reduce(Polynomial p, const std::vector<Polynomial>& basis, const std::vector<Lead>& leads,
                      const std::vector<bool>& active) {
        std::vector<Term> done;
        const Field f = p.field();
        const std::size_t n = p.n_vars();
        while (!p.is_zero()) {
            const Term& lt = p.leading_term();
            const std::uint64_t m = mask_of(lt.exp);
            std::size_t found = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (active[k] && divides(leads[k], lt.exp, m)) {
                    found = k;
                    break;
                }
            }
            if (found == basis.size()) {
                done.push_back(lt);
                p.pop_leading();
                continue;
            }
            if (++steps_ > budget_) throw BudgetExceeded("reduction budget exhausted");
            Exponents q(n);
            for (std::size_t v = 0; v < n; ++v) q[v] = static_cast<std::uint16_t>(lt.exp[v] - leads[found].exp[v]);
            p = p.minus_term_times(q, lt.degree - leads[found].degree, lt.coeff, basis[found]);
        }
        return Polynomial::from_sorted_terms(f, n, std::move(done));
    }

private:
    std::uint64_t budget_;
    std::uint64_t& steps_;
};

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const Exponents& lcm, unsigned lcm_degree) {
    const Term& ta = a.leading_term();
    const Term& tb = b.leading_term();
    const std::size_t n = a.n_vars();
    Exponents qa(n), qb(n);
    for (std::size_t v = 0; v < n; ++v) {
        qa[v] = static_cast<std::uint16_t>(lcm[v] - ta.exp[v]);
        qb[v] = static_cast<std::uint16_t>(lcm[v] - tb.exp[v]);
    }
    const Polynomial left = a.times_term(qa, lcm_degree - ta.degree, tb.coeff);
    return left.minus_term_times(qb, lcm_degree - tb.degree, ta.coeff, b);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    std::vector<Lead> leads;
    std::vector<Polynomial> monic;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        monic.push_back(g.monic());
        leads.push_back(lead_of(monic.back()));
    }
    std::uint64_t steps = 0;
    Reducer r(UINT64_MAX, steps);
    return r.reduce(f, monic, leads, std::vector<bool>(monic.size(), true));
}

GroebnerResult groebner_basis(const std::vector<Polynomial>& gens, const GroebnerOptions& options) {
    GroebnerResult result;
    std::vector<Polynomial> basis;
    std::vector<Lead> leads;
    std::vector<bool> active;
    std::vector<Pair> pairs;
    std::uint64_t steps = 0;
    Reducer reducer(options.max_reductions, steps);

    if (!gens.empty()) {
        for (const auto& g : gens) {
            if (g.n_vars() != gens.front().n_vars() || !(g.field() == gens.front().field()))
                throw InputError("ideal generators live in different rings");
        }
    }

    auto add = [&](Polynomial h) {
        h = h.monic();
        const Lead lh = lead_of(h);
        const std::size_t t = basis.size();
        // Gebauer-Moeller update.
        std::vector<Pair> fresh;
        for (std::size_t k = 0; k < t; ++k) {
            if (!active[k]) continue;
            Exponents l = lcm_of(lh.exp, leads[k].exp);
            fresh.push_back({k, t, l, exponent_degree(l)});
        }
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (coprime(lh, leads[fresh[a].i])) continue;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || !keep[b]) continue;
                if (divides_exp(fresh[b].lcm, fresh[a].lcm) &&
                    (fresh[b].lcm != fresh[a].lcm || b < a)) {
                    keep[a] = false;
                    break;
                }
            }
        }
        std::vector<Pair> kept_fresh;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            if (coprime(lh, leads[fresh[a].i])) continue;
            kept_fresh.push_back(std::move(fresh[a]));
        }
        std::vector<Pair> old;
        for (auto& pr : pairs) {
            const bool h_divides = divides_exp(lh.exp, pr.lcm);
            const bool drop = h_divides && lcm_of(leads[pr.i].exp, lh.exp) != pr.lcm &&
                              lcm_of(lh.exp, leads[pr.j].exp) != pr.lcm;
            if (!drop) old.push_back(std::move(pr));
        }
        pairs = std::move(old);
        for (auto& pr : kept_fresh) pairs.push_back(std::move(pr));
        for (std::size_t k = 0; k < t; ++k)
            if (active[k] && divides(lh, leads[k].exp, leads[k].mask)) active[k] = false;
        basis.push_back(std::move(h));
        leads.push_back(lh);
        active.push_back(true);
    };

    try {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            Polynomial r = reducer.reduce(g, basis, leads, active);
            if (!r.is_zero()) add(std::move(r));
        }
        while (!pairs.empty()) {
            auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
                const int c = degrevlex_compare(a.lcm, a.degree, b.lcm, b.degree);
                if (c != 0) return c < 0;
                return std::tie(a.j, a.i) < std::tie(b.j, b.i);
            });
            Pair pr = std::move(*best);
            pairs.erase(best);
            if (pr.degree > options.max_degree) {
                throw BudgetExceeded("S-pair degree " + std::to_string(pr.degree) + " exceeds the cap " +
                                     std::to_string(options.max_degree));
            }
            Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], pr.lcm, pr.degree);
            Polynomial r = reducer.reduce(std::move(s), basis, leads, active);
            if (!r.is_zero()) add(std::move(r));
        }
    } catch (const BudgetExceeded& e) {
        result.status = GroebnerStatus::Budget;
        result.budget_note = e.what();
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (active[k]) result.basis.push_back(basis[k]);
        result.reductions = steps;
        return result;
    }

    // Interreduce the minimal basis.
    std::vector<Polynomial> minimal;
    std::vector<Lead> min_leads;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!active[k]) continue;
        minimal.push_back(basis[k]);
        min_leads.push_back(leads[k]);
    }
    std::vector<Polynomial> reduced;
    std::uint64_t tail_steps = 0;
    Reducer tail(UINT64_MAX, tail_steps);
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<bool> others(minimal.size(), true);
        others[k] = false;
        const Term& lt = minimal[k].leading_term();
        Polynomial rest = minimal[k] - Polynomial::monomial(minimal[k].field(), lt.exp, lt.coeff);
        Polynomial r = tail.reduce(std::move(rest), minimal, min_leads, others);
        reduced.push_back((r + Polynomial::monomial(minimal[k].field(), lt.exp, lt.coeff)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        const Term& x = a.leading_term();
        const Term& y = b.leading_term();
        return degrevlex_compare(x.exp, x.degree, y.exp, y.degree) < 0;
    });
    result.basis = std::move(reduced);
    result.reductions = steps;
    return result;
}

}  // namespace ci2

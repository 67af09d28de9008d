#include "ci2/zerodim/point_count.hpp"

#include "ci2/error.hpp"
#include "ci2/exact/linear_subspace.hpp"

#include <cmath>

namespace ci2 {

namespace {

struct CompiledTerm {
    std::uint32_t coeff;
    std::vector<std::pair<std::size_t, std::uint32_t>> powers;
};

using Compiled = std::vector<CompiledTerm>;

Compiled compile(const Polynomial& g, std::uint64_t p) {
    Compiled c;
    for (const auto& t : g.terms()) {
        CompiledTerm ct;
        const std::uint64_t r = g.field().is_rational() ? reduce_mod(t.coeff.rational(), p) : t.coeff.residue();
        if (r == 0) continue;
        ct.coeff = static_cast<std::uint32_t>(r);
        for (std::size_t v = 0; v < t.exp.size(); ++v)
            if (t.exp[v]) ct.powers.emplace_back(v, t.exp[v]);
        c.push_back(std::move(ct));
    }
    return c;
}

bool vanishes(const Compiled& poly, const std::vector<std::uint32_t>& x, const GaloisField& f) {
    const std::uint64_t order = f.size() - 1;
    std::uint32_t acc = 0;
    for (const auto& t : poly) {
        std::uint64_t l = f.log(t.coeff);
        bool zero = false;
        for (const auto& [v, e] : t.powers) {
            if (x[v] == 0) {
                zero = true;
                break;
            }
            l += static_cast<std::uint64_t>(f.log(x[v])) * e;
        }
        if (zero) continue;
        acc = f.add(acc, f.exp(l % order));
    }
    return acc == 0;
}

std::uint64_t projective_size(std::uint64_t q, std::size_t n) {
    unsigned __int128 total = 0, pw = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total += pw;
        pw *= q;
        if (total > (static_cast<unsigned __int128>(1) << 62)) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(total);
}

}  // namespace

std::string to_string(IrreducibilityVerdict v) {
    switch (v) {
        case IrreducibilityVerdict::LikelyIrreducible: return "likely-irreducible";
        case IrreducibilityVerdict::ReducibleWitness: return "reducible-witness";
        case IrreducibilityVerdict::Inconclusive: break;
    }
    return "inconclusive";
}

std::uint64_t count_projective_points(const std::vector<Polynomial>& gens, const GaloisField& field,
                                      std::uint64_t max_points) {
    if (gens.empty()) throw InputError("point counting needs at least one generator");
    const std::size_t n = gens.front().n_vars();
    const std::uint64_t p = field.characteristic();
    for (const auto& g : gens) {
        if (g.n_vars() != n) throw InputError("generators live in different rings");
        if (g.field().is_prime() && g.field().characteristic() != p)
            throw InputError("generators are not over F_" + std::to_string(p));
    }
    const std::uint64_t q = field.size();
    if (projective_size(q, n) > max_points)
        throw BudgetExceeded("P^" + std::to_string(n - 1) + "(F_" + std::to_string(q) + ") exceeds the point budget");
    std::vector<Compiled> compiled;
    for (const auto& g : gens) compiled.push_back(compile(g, p));

    std::uint64_t count = 0;
    std::vector<std::uint32_t> x(n, 0);
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::fill(x.begin(), x.end(), 0);
        x[lead] = 1;
        for (;;) {
            bool on = true;
            for (const auto& c : compiled)
                if (!vanishes(c, x, field)) {
                    on = false;
                    break;
                }
            if (on) ++count;
            std::size_t pos = lead + 1;
            while (pos < n && x[pos] == q - 1) x[pos++] = 0;
            if (pos == n) break;
            ++x[pos];
        }
    }
    return count;
}

PointCountResult dimension_by_point_count(const std::vector<Polynomial>& gens, std::uint64_t p, unsigned extensions,
                                          std::uint64_t max_points) {
    if (extensions == 0) throw InputError("at least one extension degree is needed");
    if (gens.empty()) throw InputError("point counting needs at least one generator");
    const std::size_t n = gens.front().n_vars();
    PointCountResult r;
    r.p = p;
    long estimate = -1;
    for (unsigned e = 1; e <= extensions; ++e) {
        const GaloisField f(p, e);
        const std::uint64_t c = count_projective_points(gens, f, max_points);
        r.counts.push_back(c);
        if (c > 0) {
            // Integer floor of log_q(2c) without floating-point boundary issues.
            long d = 0;
            unsigned __int128 pw = f.size();
            while (pw <= 2 * static_cast<unsigned __int128>(c)) {
                pw *= f.size();
                ++d;
            }
            estimate = std::min<long>(d, static_cast<long>(n) - 1);
        }
    }
    r.dimension_estimate = estimate;
    return r;
}

IrreducibilityResult irreducibility_advisory(const std::vector<Polynomial>& gens, long proj_dim,
                                             const IrreducibilityOptions& options, std::mt19937_64& rng) {
    IrreducibilityResult r;
    if (gens.empty()) throw InputError("irreducibility needs at least one generator");
    if (options.trials == 0) {
        r.reason = "no trials requested";
        return r;
    }
    const std::size_t n = gens.front().n_vars();
    const Field field = gens.front().field();

    // Certified splitting through a monomial factor of some generator.
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const Polynomial& g = gens[gi];
        if (g.is_zero()) continue;
        Exponents common = g.terms().front().exp;
        for (const auto& t : g.terms())
            for (std::size_t v = 0; v < n; ++v) common[v] = std::min(common[v], t.exp[v]);
        for (std::size_t v = 0; v < n; ++v) {
            if (common[v] == 0) continue;
            Exponents ev(n, 0);
            ev[v] = 1;
            std::vector<Term> rest;
            for (const auto& t : g.terms()) {
                Term u = t;
                --u.exp[v];
                --u.degree;
                rest.push_back(std::move(u));
            }
            const Polynomial a = Polynomial::variable(field, n, v);
            const Polynomial b = Polynomial::from_sorted_terms(field, n, std::move(rest));
            if (b.is_constant()) continue;
            std::vector<Polynomial> ia = gens, ib = gens, iab = gens;
            ia[gi] = a;
            ib[gi] = b;
            iab[gi] = a;
            iab.push_back(b);
            const auto da = projective_dimension(ia, options.groebner);
            const auto db = projective_dimension(ib, options.groebner);
            const auto dab = projective_dimension(iab, options.groebner);
            if (da.status != DimensionStatus::Ok || db.status != DimensionStatus::Ok || dab.status != DimensionStatus::Ok)
                continue;
            if (dab.proj_dim < da.proj_dim && dab.proj_dim < db.proj_dim) {
                r.verdict = IrreducibilityVerdict::ReducibleWitness;
                r.reason = "generator " + std::to_string(gi) + " = " + a.to_string() + " * (" + b.to_string() +
                           "); V(I, " + a.to_string() + ") and V(I, cofactor) have dimensions " +
                           std::to_string(da.proj_dim) + ", " + std::to_string(db.proj_dim) +
                           " and meet in dimension " + std::to_string(dab.proj_dim);
                return r;
            }
        }
    }

    if (proj_dim < 1) {
        r.reason = proj_dim < 0 ? "empty locus" : "zero-dimensional locus; curve sections unavailable";
        return r;
    }
    const long ambient = static_cast<long>(n) - 1;
    if (proj_dim >= ambient) {
        r.verdict = IrreducibilityVerdict::LikelyIrreducible;
        r.reason = "the locus is the whole projective space";
        return r;
    }

    const std::uint64_t p = options.p ? options.p : (field.is_prime() ? field.characteristic() : 101);
    const Field fp = Field::prime(p);
    const auto gp = field.is_rational() || field.characteristic() != p ? reduce_mod_p(gens, p) : gens;
    unsigned long long degree = 1;
    for (const auto& g : gp)
        if (!g.is_zero()) degree *= static_cast<unsigned long long>(std::max(1, g.total_degree()));

    // Curve section: a random linear subspace of vector dimension ambient - proj_dim + 2.
    const std::size_t slice_dim = static_cast<std::size_t>(ambient - proj_dim + 2);
    const double width_factor = static_cast<double>((degree - 1) * (degree > 1 ? degree - 2 : 0));
    bool informative = false;
    for (unsigned trial = 0; trial < options.trials; ++trial) {
        LinearSubspace l;
        std::vector<Polynomial> restricted;
        bool ok = false;
        for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
            l = LinearSubspace::random_in(LinearSubspace::whole(fp, n), n - slice_dim, rng);
            restricted.clear();
            for (const auto& g : gp) restricted.push_back(g.compose_linear(l.parametrization()));
            const auto d = projective_dimension(restricted, options.groebner);
            ok = d.status == DimensionStatus::Ok && d.proj_dim == 1;
        }
        if (!ok) {
            r.reason = "no curve section of the expected dimension found";
            return r;
        }
        std::vector<std::uint64_t> counts;
        for (unsigned e = 1; e <= options.extensions; ++e) {
            try {
                const GaloisField gf(p, e);
                counts.push_back(count_projective_points(restricted, gf, options.max_points));
            } catch (const BudgetExceeded& ex) {
                r.slice_counts.push_back(counts);
                r.reason = std::string("point budget reached: ") + ex.what();
                return r;
            }
        }
        r.slice_counts.push_back(counts);
        double q = 1;
        for (unsigned e = 1; e <= options.extensions; ++e) {
            q *= static_cast<double>(p);
            const double width = width_factor * std::sqrt(q);
            const double n_e = static_cast<double>(counts[e - 1]);
            if (std::fabs(n_e - (q + 1)) > width) {
                r.reason = "curve-section counts leave the single-component window at e = " + std::to_string(e) +
                           " (not a certified decomposition)";
                return r;
            }
            if (width < q / 4) informative = true;
        }
    }
    if (!informative) {
        r.reason = "single-component window too wide at these field sizes";
        return r;
    }
    r.verdict = IrreducibilityVerdict::LikelyIrreducible;
    r.reason = "curve-section counts match a single geometrically irreducible component in every trial";
    return r;
}

}  // namespace ci2

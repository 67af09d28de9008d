#include "ci2/exact/pencil.hpp"

#include "ci2/error.hpp"

#include <algorithm>
#include <numeric>

namespace ci2 {

namespace {

using PolyMatrix = std::vector<std::vector<UPoly>>;

// Restrict g to its roots over the base field: gcd(g, t^p - t).
UPoly rational_root_part(const UPoly& g) {
    if (g.degree() <= 0) return g;
    const Field f = g.field();
    const UPoly t = UPoly::linear(Scalar::one(f), Scalar::zero(f));
    const UPoly tp = UPoly::powmod(t, f.characteristic(), g);
    return gcd(g, tp - t);
}

// Inverse of a modulo m, assuming gcd(a, m) = 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    const Field f = m.field();
    UPoly r0 = m, r1 = a % m;
    UPoly s0(f), s1 = UPoly::constant(Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant
    return (s0 * UPoly::constant(r0.leading().inverse())) % m;
}

// Generic rank of t*G1 + G2 by fraction-free elimination over K[t], with the
// pivots: outside their roots the rank equals the generic rank.
std::size_t generic_rank(PolyMatrix m, std::vector<UPoly>& pivots) {
    const std::size_t n = m.size();
    const Field field = n ? m[0][0].field() : Field::rationals();
    UPoly prev = UPoly::constant(Scalar::one(field));
    std::size_t k = 0;
    for (; k < n; ++k) {
        std::size_t pr = n, pc = n;
        for (std::size_t i = k; i < n && pr == n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (!m[i][j].is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == n) break;
        std::swap(m[pr], m[k]);
        for (auto& row : m) std::swap(row[pc], row[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = UPoly(field);
        }
        prev = m[k][k];
        pivots.push_back(prev);
    }
    return k;
}

struct SpecialRank {
    std::size_t rank = 0;
    std::vector<UPoly> moduli;  // leaves attaining `rank`
    bool any = false;
};

void record(SpecialRank& out, std::size_t rank, const UPoly& modulus) {
    if (!out.any || rank < out.rank) {
        out.any = true;
        out.rank = rank;
        out.moduli.clear();
    }
    if (rank == out.rank) out.moduli.push_back(modulus);
}

// Minimum rank of m over the roots of `modulus`. Elimination over K[t]/(modulus)
// splits the modulus whenever a pivot candidate is a zero divisor, so every leaf
// has the same rank at all of its roots.
void special_rank(PolyMatrix m, UPoly modulus, std::size_t rank, SpecialRank& out) {
    if (modulus.degree() <= 0) return;
    const std::size_t n = m.size();
    for (auto& row : m)
        for (auto& x : row) x = x % modulus;
    for (;;) {
        std::size_t pr = n, pc = n;
        for (std::size_t i = rank; i < n && pr == n; ++i)
            for (std::size_t j = rank; j < n; ++j) {
                if (m[i][j].is_zero()) continue;
                const UPoly d = gcd(m[i][j], modulus);
                if (d.degree() > 0) {
                    special_rank(m, d, rank, out);
                    special_rank(std::move(m), modulus.exact_div(d), rank, out);
                    return;
                }
                pr = i;
                pc = j;
                break;
            }
        if (pr == n) {
            record(out, rank, modulus);
            return;
        }
        std::swap(m[pr], m[rank]);
        for (auto& row : m) std::swap(row[pc], row[rank]);
        const UPoly inv = inverse_mod(m[rank][rank], modulus);
        for (std::size_t i = rank + 1; i < n; ++i) {
            if (m[i][rank].is_zero()) continue;
            const UPoly f = (m[i][rank] * inv) % modulus;
            for (std::size_t j = rank + 1; j < n; ++j) m[i][j] = (m[i][j] - f * m[rank][j]) % modulus;
            m[i][rank] = UPoly(modulus.field());
        }
        ++rank;
    }
}

}  // namespace

std::string to_string(PencilSemantics s) {
    switch (s) {
        case PencilSemantics::AlgebraicClosure: return "algebraic-closure";
        case PencilSemantics::RationalPoints: return "rational-points";
        case PencilSemantics::Default: break;
    }
    return "default";
}

PencilRankResult pencil_min_rank_detailed(const QuadraticForm& q1, const QuadraticForm& q2,
                                          PencilSemantics semantics) {
    if (q1.n_vars() != q2.n_vars()) throw InputError("pencil forms have different sizes");
    if (!(q1.field() == q2.field())) throw InputError("pencil forms live over different fields");
    const Field field = q1.field();
    if (semantics == PencilSemantics::Default)
        semantics = field.is_rational() ? PencilSemantics::AlgebraicClosure : PencilSemantics::RationalPoints;
    if (semantics == PencilSemantics::RationalPoints && field.is_rational())
        throw InputError("rational-point semantics needs a prime field");

    const std::size_t n = q1.n_vars();
    PencilRankResult result;
    result.semantics = semantics;
    const std::size_t rank_at_infinity = q1.rank();

    // Entry (i, j) of t*G1 + G2 as a polynomial in t.
    PolyMatrix pencil(n, std::vector<UPoly>(n, UPoly(field)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pencil[i][j] = UPoly::linear(q1.gram()(i, j), q2.gram()(i, j));

    std::vector<UPoly> pivots;
    const std::size_t generic = generic_rank(pencil, pivots);

    // Points where the rank may drop: roots of the pivots, merged into one
    // monic polynomial so no root is visited twice.
    UPoly special = UPoly::constant(Scalar::one(field));
    for (const auto& p : pivots) {
        const UPoly part = semantics == PencilSemantics::RationalPoints ? rational_root_part(p.monic()) : p.monic();
        if (part.degree() > 0) special = (special * part).exact_div(gcd(special, part));
    }
    SpecialRank sr;
    special_rank(pencil, special, 0, sr);

    // Over F_p every affine point may be special; then the generic rank need not occur.
    bool generic_attained = true;
    if (semantics == PencilSemantics::RationalPoints && special.degree() >= 0 &&
        static_cast<std::uint64_t>(special.degree()) >= field.characteristic())
        generic_attained = false;

    std::size_t best = rank_at_infinity;
    if (generic_attained) best = std::min(best, generic);
    if (sr.any) best = std::min(best, sr.rank);
    result.min_rank = best;
    result.attained_at_infinity = rank_at_infinity == best;
    if (sr.any && sr.rank == best && best < generic) {
        UPoly locus = UPoly::constant(Scalar::one(field));
        for (const auto& m : sr.moduli) locus = (locus * m).exact_div(gcd(locus, m));
        result.root_locus = locus.monic();
    }
    return result;
}

SetRankResult set_min_rank_detailed(const std::vector<QuadraticForm>& forms, std::uint64_t max_points) {
    if (forms.empty() || forms.size() > 4) throw InputError("set_min_rank needs between 1 and 4 forms");
    const Field field = forms.front().field();
    const std::size_t n = forms.front().n_vars();
    for (const auto& q : forms)
        if (q.n_vars() != n || !(q.field() == field)) throw InputError("forms have different sizes or fields");

    std::vector<std::uint64_t> primes;
    if (field.is_rational()) {
        primes.assign(std::begin(kSetRankPrimes), std::end(kSetRankPrimes));
    } else {
        primes.push_back(field.characteristic());
    }
    const std::size_t k = forms.size();

    SetRankResult best;
    best.min_rank = n + 1;
    best.primes = primes;
    for (std::uint64_t p : primes) {
        // Point count (p^k - 1) / (p - 1), guarded against overflow.
        unsigned __int128 count = 0, pw = 1;
        for (std::size_t i = 0; i < k; ++i) {
            count += pw;
            pw *= p;
        }
        if (count > max_points) throw BudgetExceeded("set_min_rank: P^" + std::to_string(k - 1) + "(F_" +
                                                     std::to_string(p) + ") exceeds the enumeration budget");
        const Field fp = Field::prime(p);
        std::vector<std::vector<std::uint64_t>> grams(k, std::vector<std::uint64_t>(n * n));
        for (std::size_t f = 0; f < k; ++f)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Scalar& x = forms[f].gram()(i, j);
                    grams[f][i * n + j] = field.is_rational() ? reduce_mod(x.rational(), p) : x.residue();
                }
        // Normalized representatives: leading nonzero coordinate equal to 1.
        for (std::size_t lead = 0; lead < k; ++lead) {
            std::vector<std::uint64_t> lambda(k, 0);
            lambda[lead] = 1;
            for (;;) {
                Matrix m(fp, n, n);
                for (std::size_t e = 0; e < n * n; ++e) {
                    std::uint64_t acc = 0;
                    for (std::size_t f = lead; f < k; ++f) acc = (acc + mul_mod(lambda[f], grams[f][e], p)) % p;
                    m(e / n, e % n) = Scalar::from_residue(fp, acc);
                }
                const std::size_t r = m.rank();
                if (r < best.min_rank) {
                    best.min_rank = r;
                    best.witness = lambda;
                }
                std::size_t pos = lead + 1;
                while (pos < k && lambda[pos] == p - 1) lambda[pos++] = 0;
                if (pos == k) break;
                ++lambda[pos];
            }
        }
    }
    return best;
}

}  // namespace ci2

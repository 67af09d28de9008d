#include "ci2/bounds/codim.hpp"

#include "ci2/error.hpp"

namespace ci2::bounds {

namespace {

std::vector<std::string> regime_warnings(long M) {
    if (M >= kRegimeMinM) return {};
    return {"M = " + std::to_string(M) + " is below 27; value computed outside the stated regime"};
}

mpz_class half(const mpz_class& x) {
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), x.get_mpz_t(), 1);
    return q;
}

}  // namespace

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

IntegerBound theorem02_bound(long M, unsigned d1) {
    if (M < 2) throw InputError("theorem02_bound: M must be at least 2");
    if (d1 < 2) throw InputError("theorem02_bound: d1 must be at least 2");
    const mpz_class m = M;
    IntegerBound out;
    out.value = d1 == 3 ? half(m * m - 19 * m + 82) : half(m * m - 17 * m + 64);
    out.warnings = regime_warnings(M);
    return out;
}

mpz_class rank_stratum_codim(long N, long r) {
    if (N < 0 || r < 0 || r > N) throw InputError("rank_stratum_codim: need 0 <= r <= N");
    const mpz_class a = N - r;
    return half(a * (a + 1));
}

ConditionCodims condition_codims(long M) {
    if (M < 2) throw InputError("condition_codims: M must be at least 2");
    const mpz_class m = M;
    ConditionCodims c;
    c.M = M;
    c.nonsingular = half(m * m - 9 * m + 14);
    c.b22_1 = half((m - 9) * (m - 10)) - 1 + 2 * (m + 2);
    c.b22_2 = half(m * m - 15 * m + 66);
    c.b22_3 = half(m * m - 5 * m + 16);
    c.b22_2_d1_3 = half(m * m - 17 * m + 82);
    c.warnings = regime_warnings(M);
    return c;
}

ProjectionMinimum projection_minimum(unsigned d1, unsigned d2) {
    if (d1 < 2 || d2 < d1) throw InputError("projection_minimum: need 2 <= d1 <= d2");
    ProjectionMinimum out;
    const long M = static_cast<long>(d1) + static_cast<long>(d2) - 2;
    out.M = M;
    out.warnings = regime_warnings(M);
    std::vector<unsigned> degrees;
    for (unsigned k = 2; k <= d1; ++k) degrees.insert(degrees.end(), {k, k});
    for (unsigned k = d1 + 1; k <= d2; ++k) degrees.push_back(k);
    if (degrees.size() < 5 + 1) throw InputError("projection_minimum: S[-5] is empty for these degrees");
    degrees.resize(degrees.size() - 5);
    for (std::size_t i = 1; i <= degrees.size(); ++i) {
        const unsigned m = degrees[i - 1];
        if (i < degrees.size() && degrees[i] == m) continue;
        ProjectionEntry e{i, m, binomial(M - 2 - static_cast<long>(i) + m, m)};
        if (out.entries.empty() || e.value < out.value) {
            out.value = e.value;
            out.argmin_position = i;
            out.argmin_degree = m;
        }
        out.entries.push_back(std::move(e));
    }
    out.closed_form = binomial(M - 2, 2);
    out.matches_closed_form = out.value == out.closed_form;
    return out;
}

mpz_class theorem21_bound(long N, long k) {
    if (k < 1 || k >= N) throw InputError("theorem21_bound: need 1 <= k < N");
    const mpz_class a = N - k;
    return half((a - 1) * (a - 4)) + 2;
}

InductionCodims induction_codims(long N, long k, long j, long l) {
    if (k < 1 || k >= N) throw InputError("induction_codims: need 1 <= k < N");
    if (j < 1 || j > k) throw InputError("induction_codims: need 1 <= j <= k");
    if (l < 1 || l > k - j + 1) throw InputError("induction_codims: need 1 <= l <= k - j + 1");
    InductionCodims r{N, k, j, l, 0, 0, 0, 0};
    const mpz_class c = N + j - k;
    r.step_bound = half((c - l - 2) * (c - l - 3)) - l + 1;
    r.stratum = mpz_class(k - j + 1) + mpz_class(l) * (c - 1 + l);
    r.combined = r.stratum + r.step_bound - N;
    r.mq_bound = half((c - 2) * (c - 5)) + 2;
    return r;
}

InductionScan induction_scan(long N, long k, long j) {
    InductionScan s;
    for (long l = 1; l <= k - j + 1; ++l) {
        s.rows.push_back(induction_codims(N, k, j, l));
        const auto& r = s.rows.back();
        if (l == 1 || r.step_bound < s.rows[s.argmin_step - 1].step_bound) s.argmin_step = l;
        if (l == 1 || r.combined < s.min_combined) {
            s.argmin_combined = l;
            s.min_combined = r.combined;
        }
    }
    s.combined_min_equals_mq = s.min_combined == s.rows.front().mq_bound;
    return s;
}

std::string to_string(MultCase c) {
    switch (c) {
        case MultCase::Nonsingular: return "nonsingular";
        case MultCase::Quadratic: return "quadratic";
        case MultCase::BiquadraticCodim2: return "biquadratic-codim2";
        case MultCase::BiquadraticCodim3: break;
    }
    return "biquadratic-codim3";
}

MultCase parse_mult_case(const std::string& s) {
    for (auto c : {MultCase::Nonsingular, MultCase::Quadratic, MultCase::BiquadraticCodim2,
                   MultCase::BiquadraticCodim3})
        if (to_string(c) == s) return c;
    throw InputError("unknown multiplicity case '" + s + "'");
}

mpq_class mult_deg_threshold(MultCase c, unsigned d1, unsigned d2) {
    if (d1 < 2 || d2 < d1) throw InputError("mult_deg_threshold: need 2 <= d1 <= d2");
    int num = 2;
    switch (c) {
        case MultCase::Nonsingular: num = 2; break;
        case MultCase::Quadratic: num = 4; break;
        case MultCase::BiquadraticCodim2: num = 6; break;
        case MultCase::BiquadraticCodim3: num = 8; break;
    }
    mpq_class r(num, static_cast<unsigned long>(d1) * d2);
    r.canonicalize();
    return r;
}

namespace {

mpq_class ratio(long num, long den) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

RatioCheck hypertangent_ratio_check(unsigned d1, unsigned d2) {
    if (d1 < 2 || d2 < d1) throw InputError("hypertangent_ratio_check: need 2 <= d1 <= d2");
    const long a = d1, b = d2;
    RatioCheck r;
    const mpq_class four_thirds(4, 3);
    if (b - a <= 1) {
        r.case_index = 1;
        r.expression = "(4/3)(d1-2)(d2-3)/(d1 d2)";
        r.value = four_thirds * ratio((a - 2) * (b - 3), a * b);
    } else if (b - a <= 3) {
        r.case_index = 2;
        r.expression = "(4/3)(d1-1)(d2-4)/(d1 d2)";
        r.value = four_thirds * ratio((a - 1) * (b - 4), a * b);
    } else {
        r.case_index = 3;
        r.expression = "(4/3)(d2-5)/d2";
        r.value = four_thirds * ratio(b - 5, b);
    }
    r.value.canonicalize();
    r.satisfied = r.value >= 1;
    return r;
}

}  // namespace ci2::bounds

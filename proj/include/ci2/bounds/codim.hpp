#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace ci2::bounds {

/// Fibration regime lower limit for M; smaller values are computed with a warning.
inline constexpr long kRegimeMinM = 27;

mpz_class binomial(long n, long k);

struct IntegerBound {
    mpz_class value;
    std::vector<std::string> warnings;
};

/// Lower bound for codim(F \ F_reg in F).
IntegerBound theorem02_bound(long M, unsigned d1);

/// Codimension of the rank <= r stratum of quadratic forms in N variables.
mpz_class rank_stratum_codim(long N, long r);

struct ConditionCodims {
    long M = 0;
    mpz_class nonsingular;  // B(1)
    mpz_class b22_1;
    mpz_class b22_2;
    mpz_class b22_3;
    mpz_class b22_2_d1_3;  // B(2^2.2) when d1 = 3
    std::vector<std::string> warnings;
};

ConditionCodims condition_codims(long M);

struct ProjectionEntry {
    std::size_t position;  // 1-based index in S[-5]
    unsigned degree;
    mpz_class value;
};

struct ProjectionMinimum {
    long M = 0;
    mpz_class value;
    std::size_t argmin_position = 0;
    unsigned argmin_degree = 0;
    std::vector<ProjectionEntry> entries;
    mpz_class closed_form;  // C(M-2, 2)
    bool matches_closed_form = false;
    std::vector<std::string> warnings;
};

/// Minimum of the projection-method estimates over S[-5] restricted to a
/// codimension-2 subspace of the tangent space. Each degree contributes its
/// last surviving entry.
ProjectionMinimum projection_minimum(unsigned d1, unsigned d2);

/// (N-k-1)(N-k-4)/2 + 2.
mpz_class theorem21_bound(long N, long k);

struct InductionCodims {
    long N = 0, k = 0, j = 0, l = 0;
    mpz_class step_bound;  // rank-condition violation, (N+j-k-l-2)(N+j-k-l-3)/2 - l + 1
    mpz_class stratum;     // codim of {dim<g_{j..k,1}> = k-j+1-l, o fixed}
    mpz_class combined;    // stratum + step_bound - N
    mpz_class mq_bound;    // (N+j-k-2)(N+j-k-5)/2 + 2
};

InductionCodims induction_codims(long N, long k, long j, long l);

struct InductionScan {
    std::vector<InductionCodims> rows;  // l = 1 .. k-j+1
    long argmin_step = 0;
    long argmin_combined = 0;
    mpz_class min_combined;
    bool combined_min_equals_mq = false;
};

InductionScan induction_scan(long N, long k, long j);

enum class MultCase { Nonsingular, Quadratic, BiquadraticCodim2, BiquadraticCodim3 };

std::string to_string(MultCase c);
MultCase parse_mult_case(const std::string& s);

/// Upper bound for mult_o/deg of the relevant subvariety.
mpq_class mult_deg_threshold(MultCase c, unsigned d1, unsigned d2);

struct RatioCheck {
    int case_index = 0;  // 1, 2 or 3
    std::string expression;
    mpq_class value;
    bool satisfied = false;
};

RatioCheck hypertangent_ratio_check(unsigned d1, unsigned d2);

}  // namespace ci2::bounds

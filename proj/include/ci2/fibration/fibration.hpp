#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ci2::fibration {

struct FibrationSpec {
    unsigned m = 1;
    unsigned d1 = 2, d2 = 2;
    unsigned l1 = 0, l2 = 0;

    long M() const { return static_cast<long>(d1) + static_cast<long>(d2) - 2; }
    /// Throws InputError unless m >= 1 and 2 <= d1 <= d2.
    void validate() const;
};

/// Classes in Z[H_S, H_P] / (H_S^{m+1}, H_P^{M+3}) on P^m x P^{M+2}.
class BigradedClass {
public:
    struct Term {
        unsigned a, b;  // exponents of H_S, H_P
        std::int64_t c;
    };

    BigradedClass(unsigned m, unsigned top_p) : m_(m), top_p_(top_p) {}
    static BigradedClass monomial(unsigned m, unsigned top_p, unsigned a, unsigned b, std::int64_t c = 1);

    unsigned base_dim() const { return m_; }
    unsigned fibre_top() const { return top_p_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::int64_t coefficient(unsigned a, unsigned b) const;
    /// Coefficient of H_S^m H_P^{top_p}.
    std::int64_t degree() const { return coefficient(m_, top_p_); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(unsigned a, unsigned b, std::int64_t c);
    BigradedClass operator+(const BigradedClass& o) const;
    BigradedClass operator*(const BigradedClass& o) const;
    BigradedClass pow(unsigned e) const;
    bool operator==(const BigradedClass& o) const;
    std::string to_string() const;

private:
    void check_compatible(const BigradedClass& o) const;

    unsigned m_, top_p_;
    std::vector<Term> terms_;  // sorted by (a, b), nonzero coefficients
};

BigradedClass anticanonical_class(const FibrationSpec& s);

struct IntersectionResult {
    std::int64_t number = 0;
    bool satisfied = false;
};

/// (-K_V . pi^{-1}(line) . H_P^M) computed in the bigraded ring.
IntersectionResult intersection_criterion(const FibrationSpec& s);

enum class Category { Superrigid, ConditionIiiOnly, KConditionOnly, NonRigid };

std::string to_string(Category c);

struct SuperrigidityReport {
    FibrationSpec spec;
    mpq_class lhs;  // l1 (1 - 1/d1) + l2 (1 - 1/d2)
    bool main_inequality = false;  // lhs >= m + 1
    bool condition_iii = false;    // lhs > m
    bool k_condition = false;      // l1 + l2 >= m + 1
    bool non_rigid = false;        // l1 + l2 <= m
    Category category = Category::NonRigid;
    IntersectionResult intersection;
    bool equivalence_holds = false;
    /// dim of the base allowed by the codimension estimate: bound - 1.
    mpz_class base_dim_budget;
    bool within_budget = false;
    std::vector<std::string> warnings;
};

SuperrigidityReport superrigidity_criterion(const FibrationSpec& s);

/// Intersection number by the expanded closed form, without the ring.
std::int64_t intersection_closed_form(const FibrationSpec& s);

struct GridRange {
    unsigned m_max = 10, l_max = 20, d_max = 30;
};

struct GridSummary {
    std::uint64_t cases = 0;
    std::uint64_t discrepancies = 0;
    std::uint64_t superrigid = 0, iii_only = 0, k_only = 0, non_rigid = 0;
    std::vector<FibrationSpec> first_discrepancies;
};

/// Sweeps m in [1, m_max], l1, l2 in [0, l_max], 2 <= d1 <= d2 <= d_max.
GridSummary grid_sweep(const GridRange& r, unsigned threads = 0);

}  // namespace ci2::fibration

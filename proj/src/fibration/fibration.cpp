#include "ci2/fibration/fibration.hpp"

#include "ci2/bounds/codim.hpp"
#include "ci2/error.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ci2::fibration {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("bigraded coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("bigraded coefficient overflow");
    return r;
}

bool term_less(const BigradedClass::Term& x, unsigned a, unsigned b) { return x.a < a || (x.a == a && x.b < b); }

}  // namespace

void FibrationSpec::validate() const {
    if (m < 1) throw InputError("fibration: m must be at least 1");
    if (d1 < 2 || d2 < d1) throw InputError("fibration: need 2 <= d1 <= d2");
}

BigradedClass BigradedClass::monomial(unsigned m, unsigned top_p, unsigned a, unsigned b, std::int64_t c) {
    BigradedClass r(m, top_p);
    r.add_term(a, b, c);
    return r;
}

std::int64_t BigradedClass::coefficient(unsigned a, unsigned b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{a, b},
                               [](const Term& t, const std::pair<unsigned, unsigned>& k) {
                                   return term_less(t, k.first, k.second);
                               });
    return it != terms_.end() && it->a == a && it->b == b ? it->c : 0;
}

void BigradedClass::add_term(unsigned a, unsigned b, std::int64_t c) {
    if (c == 0 || a > m_ || b > top_p_) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{a, b},
                               [](const Term& t, const std::pair<unsigned, unsigned>& k) {
                                   return term_less(t, k.first, k.second);
                               });
    if (it != terms_.end() && it->a == a && it->b == b) {
        it->c = checked_add(it->c, c);
        if (it->c == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{a, b, c});
    }
}

void BigradedClass::check_compatible(const BigradedClass& o) const {
    if (m_ != o.m_ || top_p_ != o.top_p_) throw std::invalid_argument("bigraded classes live in different rings");
}

BigradedClass BigradedClass::operator+(const BigradedClass& o) const {
    check_compatible(o);
    BigradedClass r = *this;
    for (const auto& t : o.terms_) r.add_term(t.a, t.b, t.c);
    return r;
}

BigradedClass BigradedClass::operator*(const BigradedClass& o) const {
    check_compatible(o);
    BigradedClass r(m_, top_p_);
    for (const auto& x : terms_)
        for (const auto& y : o.terms_) {
            if (x.a + y.a > m_ || x.b + y.b > top_p_) continue;
            r.add_term(x.a + y.a, x.b + y.b, checked_mul(x.c, y.c));
        }
    return r;
}

BigradedClass BigradedClass::pow(unsigned e) const {
    BigradedClass r = monomial(m_, top_p_, 0, 0);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool BigradedClass::operator==(const BigradedClass& o) const {
    if (m_ != o.m_ || top_p_ != o.top_p_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].a != o.terms_[i].a || terms_[i].b != o.terms_[i].b || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

std::string BigradedClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        std::string mono;
        if (t.a) mono += "H_S" + (t.a > 1 ? "^" + std::to_string(t.a) : std::string());
        if (t.b) mono += (mono.empty() ? "" : "*") + std::string("H_P") + (t.b > 1 ? "^" + std::to_string(t.b) : "");
        const std::int64_t mag = t.c < 0 ? -t.c : t.c;
        if (!s.empty()) s += t.c < 0 ? " - " : " + ";
        else if (t.c < 0) s += "-";
        if (mono.empty()) s += std::to_string(mag);
        else if (mag == 1) s += mono;
        else s += std::to_string(mag) + "*" + mono;
    }
    return s;
}

BigradedClass anticanonical_class(const FibrationSpec& s) {
    s.validate();
    const unsigned top = static_cast<unsigned>(s.M()) + 2;
    BigradedClass k(s.m, top);
    k.add_term(1, 0, static_cast<std::int64_t>(s.m) + 1 - s.l1 - s.l2);
    k.add_term(0, 1, 1);
    return k;
}

IntersectionResult intersection_criterion(const FibrationSpec& s) {
    s.validate();
    const unsigned top = static_cast<unsigned>(s.M()) + 2;
    BigradedClass h1(s.m, top), h2(s.m, top);
    h1.add_term(1, 0, s.l1);
    h1.add_term(0, 1, s.d1);
    h2.add_term(1, 0, s.l2);
    h2.add_term(0, 1, s.d2);
    const BigradedClass cut = BigradedClass::monomial(s.m, top, s.m - 1, static_cast<unsigned>(s.M()));
    const BigradedClass product = h1 * h2 * cut * anticanonical_class(s);
    IntersectionResult r;
    r.number = product.degree();
    r.satisfied = r.number <= 0;
    return r;
}

std::int64_t intersection_closed_form(const FibrationSpec& s) {
    const std::int64_t d1 = s.d1, d2 = s.d2, l1 = s.l1, l2 = s.l2, m = s.m;
    return d1 * d2 * (m + 1 - l1 - l2) + l1 * d2 + l2 * d1;
}

std::string to_string(Category c) {
    switch (c) {
        case Category::Superrigid: return "superrigid";
        case Category::ConditionIiiOnly: return "condition-iii-only";
        case Category::KConditionOnly: return "k-condition-only";
        case Category::NonRigid: break;
    }
    return "non-rigid";
}

SuperrigidityReport superrigidity_criterion(const FibrationSpec& s) {
    s.validate();
    SuperrigidityReport r;
    r.spec = s;
    r.lhs = mpq_class(s.l1) * mpq_class(s.d1 - 1, s.d1) + mpq_class(s.l2) * mpq_class(s.d2 - 1, s.d2);
    r.lhs.canonicalize();
    r.main_inequality = r.lhs >= s.m + 1;
    r.condition_iii = r.lhs > s.m;
    r.k_condition = s.l1 + s.l2 >= s.m + 1;
    r.non_rigid = s.l1 + s.l2 <= s.m;
    if (r.main_inequality) r.category = Category::Superrigid;
    else if (r.condition_iii) r.category = Category::ConditionIiiOnly;
    else if (r.k_condition) r.category = Category::KConditionOnly;
    else r.category = Category::NonRigid;
    r.intersection = intersection_criterion(s);
    r.equivalence_holds = r.intersection.satisfied == r.main_inequality;
    const auto bound = bounds::theorem02_bound(s.M(), s.d1);
    r.base_dim_budget = bound.value - 1;
    r.within_budget = mpz_class(s.m) <= r.base_dim_budget;
    r.warnings = bound.warnings;
    if (s.d1 == 3) r.warnings.push_back("d1 = 3 uses the smaller codimension bound");
    return r;
}

GridSummary grid_sweep(const GridRange& range, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max(1u, range.m_max));
    GridSummary total;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            GridSummary local;
            for (unsigned m = 1 + w; m <= range.m_max; m += threads)
                for (unsigned d1 = 2; d1 <= range.d_max; ++d1)
                    for (unsigned d2 = d1; d2 <= range.d_max; ++d2)
                        for (unsigned l1 = 0; l1 <= range.l_max; ++l1)
                            for (unsigned l2 = 0; l2 <= range.l_max; ++l2) {
                                const FibrationSpec s{m, d1, d2, l1, l2};
                                const bool ring = intersection_criterion(s).satisfied;
                                // lhs >= m + 1 with denominators cleared by d1 d2
                                const std::int64_t lhs = static_cast<std::int64_t>(l1) * (d1 - 1) * d2 +
                                                         static_cast<std::int64_t>(l2) * (d2 - 1) * d1;
                                const std::int64_t rhs = static_cast<std::int64_t>(m) * d1 * d2;
                                const bool main = lhs >= rhs + static_cast<std::int64_t>(d1) * d2;
                                ++local.cases;
                                if (ring != main) {
                                    ++local.discrepancies;
                                    if (local.first_discrepancies.size() < 10) local.first_discrepancies.push_back(s);
                                }
                                if (main) ++local.superrigid;
                                else if (lhs > rhs) ++local.iii_only;
                                else if (l1 + l2 >= m + 1) ++local.k_only;
                                else ++local.non_rigid;
                            }
            std::lock_guard lock(mu);
            total.cases += local.cases;
            total.discrepancies += local.discrepancies;
            total.superrigid += local.superrigid;
            total.iii_only += local.iii_only;
            total.k_only += local.k_only;
            total.non_rigid += local.non_rigid;
            for (auto& s : local.first_discrepancies)
                if (total.first_discrepancies.size() < 10) total.first_discrepancies.push_back(s);
        });
    }
    for (auto& t : pool) t.join();
    return total;
}

}  // namespace ci2::fibration

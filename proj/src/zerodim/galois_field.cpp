#include "ci2/zerodim/galois_field.hpp"

#include "ci2/error.hpp"
#include "ci2/exact/scalar.hpp"

#include <stdexcept>

namespace ci2 {

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients mod p, constant first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const std::uint64_t inv_lead = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t f = mul_mod(a.back(), inv_lead, p);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = (a[shift + i] + p - mul_mod(f, m[i], p)) % p;
        trim(a);
    }
    return a;
}

// Monic polynomial of degree d indexed by the base-p digits of `index`.
Poly monic_from_index(std::uint64_t index, unsigned d, std::uint64_t p) {
    Poly a(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        a[i] = index % p;
        index /= p;
    }
    a[d] = 1;
    return a;
}

bool irreducible(const Poly& f, std::uint64_t p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(std::uint64_t p, unsigned e) : p_(p), e_(e) {
    if (!is_prime_u64(p)) throw InputError(std::to_string(p) + " is not prime");
    if (e == 0) throw InputError("extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > (std::uint64_t{1} << 22)) throw BudgetExceeded("F_{p^e} larger than 2^22 elements");
    }
    q_ = static_cast<std::uint32_t>(q);

    Poly modulus;
    std::uint64_t count = q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly cand = monic_from_index(idx, e, p);
        if (e == 1 || irreducible(cand, p)) {
            modulus = cand;
            break;
        }
    }
    modulus_.assign(modulus.begin(), modulus.end());

    auto encode = [&](const Poly& a) {
        std::uint32_t v = 0, pw = 1;
        for (std::size_t i = 0; i < e; ++i) {
            v += static_cast<std::uint32_t>((i < a.size() ? a[i] : 0) * pw);
            pw *= static_cast<std::uint32_t>(p);
        }
        return v;
    };
    auto decode = [&](std::uint32_t v) {
        Poly a(e, 0);
        for (unsigned i = 0; i < e; ++i) {
            a[i] = v % p;
            v /= static_cast<std::uint32_t>(p);
        }
        return a;
    };
    auto multiply = [&](const Poly& a, const Poly& b) {
        Poly c(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mul_mod(a[i], b[j], p)) % p;
        return poly_mod(c, modulus, p);
    };

    log_.assign(q_, 0);
    exp_.assign(2 * static_cast<std::size_t>(q_ - 1) + 1, 0);
    bool found = false;
    for (std::uint32_t gen = 1; gen < q_ && !found; ++gen) {
        const Poly gp = decode(gen);
        Poly cur{1};
        std::vector<bool> seen(q_, false);
        found = true;
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
            const std::uint32_t v = encode(cur);
            if (seen[v]) {
                found = false;
                break;
            }
            seen[v] = true;
            exp_[k] = v;
            log_[v] = k;
            cur = multiply(cur, gp);
        }
    }
    if (!found) throw std::logic_error("no primitive element found");
    for (std::size_t k = q_ - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q_ - 1)];

    if (q_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                std::uint32_t r = 0, pw = 1, x = a, y = b;
                for (unsigned i = 0; i < e; ++i) {
                    r += static_cast<std::uint32_t>(((x % p) + (y % p)) % p) * pw;
                    x /= static_cast<std::uint32_t>(p);
                    y /= static_cast<std::uint32_t>(p);
                    pw *= static_cast<std::uint32_t>(p);
                }
                add_table_[static_cast<std::size_t>(a) * q_ + b] = r;
            }
    }
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    if (e_ == 1) return static_cast<std::uint32_t>((a + b) % p_);
    std::uint32_t r = 0, pw = 1;
    const auto p = static_cast<std::uint32_t>(p_);
    for (unsigned i = 0; i < e_; ++i) {
        r += ((a % p) + (b % p)) % p * pw;
        a /= p;
        b /= p;
        pw *= p;
    }
    return r;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const noexcept {
    std::uint32_t r = 0, pw = 1;
    const auto p = static_cast<std::uint32_t>(p_);
    for (unsigned i = 0; i < e_; ++i) {
        r += ((p - a % p) % p) * pw;
        a /= p;
        pw *= p;
    }
    return r;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

}  // namespace ci2

#pragma once

#include <cstdint>
#include <vector>

namespace ci2 {

/// The finite field F_{p^e} with q = p^e <= 2^22. An element is encoded as
/// the integer sum c_k p^k of its coefficients in the polynomial basis, so
/// the prime subfield is {0, ..., p-1}. Multiplication goes through log tables.
class GaloisField {
public:
    GaloisField(std::uint64_t p, unsigned e);

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return e_; }
    std::uint32_t size() const noexcept { return q_; }
    /// Coefficients of the monic irreducible modulus, constant term first.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg(std::uint32_t a) const noexcept;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    std::uint32_t inv(std::uint32_t a) const;
    /// Discrete log to the chosen primitive element; undefined for 0.
    std::uint32_t log(std::uint32_t a) const noexcept { return log_[a]; }
    /// g^k for 0 <= k < 2(q-1).
    std::uint32_t exp(std::uint64_t k) const noexcept { return exp_[k]; }

private:
    std::uint64_t p_;
    unsigned e_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> add_table_;
};

}  // namespace ci2

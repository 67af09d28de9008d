#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ci2 {

/// Coefficient field: the rationals or a prime field F_p with p < 2^61.
class Field {
public:
    constexpr Field() noexcept = default;

    static constexpr Field rationals() noexcept { return Field(); }
    /// Throws InputError unless p is a prime below 2^61.
    static Field prime(std::uint64_t p);

    constexpr bool is_rational() const noexcept { return p_ == 0; }
    constexpr bool is_prime() const noexcept { return p_ != 0; }
    /// 0 for the rationals.
    constexpr std::uint64_t characteristic() const noexcept { return p_; }

    /// "Q" or "F_p".
    std::string to_string() const;

    friend constexpr bool operator==(Field, Field) noexcept = default;

private:
    std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n) noexcept;

/// An element of a Field. Arithmetic between elements of different fields
/// throws std::invalid_argument.
class Scalar {
public:
    Scalar() = default;
    Scalar(Field field, long value);
    Scalar(Field field, const mpq_class& value);

    static Scalar zero(Field field) { return Scalar(field, 0L); }
    static Scalar one(Field field) { return Scalar(field, 1L); }
    /// Prime fields only; `residue` is taken mod p.
    static Scalar from_residue(Field field, std::uint64_t residue);
    /// Integer or "a/b". Throws InputError on malformed text or when the
    /// denominator vanishes in the field.
    static Scalar parse(Field field, std::string_view text);

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    /// Valid only over the rationals.
    const mpq_class& rational() const;
    /// Valid only over F_p; the canonical residue in [0, p).
    std::uint64_t residue() const;

    /// Integer or "a/b" over the rationals, canonical residue over F_p.
    std::string to_string() const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void check_same_field(const Scalar& other) const;

    Field field_;
    std::uint64_t v_ = 0;
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Modular helpers for p < 2^61.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept;
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Reduce a rational into F_p. Throws InputError when p divides the denominator.
std::uint64_t reduce_mod(const mpq_class& q, std::uint64_t p);

}  // namespace ci2

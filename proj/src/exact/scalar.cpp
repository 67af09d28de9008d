#include "ci2/exact/scalar.hpp"

#include "ci2/error.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace ci2 {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 61;

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = 1;
    std::uint64_t base = a % n;
    for (std::uint64_t e = d; e; e >>= 1) {
        if (e & 1) x = mul_mod(x, base, n);
        base = mul_mod(base, base, n);
    }
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        if (a % n == 0) continue;
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept {
    std::uint64_t result = 1 % p;
    base %= p;
    for (; exp; exp >>= 1) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow_mod(a, p - 2, p);
}

std::uint64_t reduce_mod(const mpq_class& q, std::uint64_t p) {
    mpz_class pz;
    mpz_set_ui(pz.get_mpz_t(), static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    if (den == 0) throw InputError("denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p));
    return mul_mod(num.get_ui(), inv_mod(den.get_ui(), p), p);
}

Field Field::prime(std::uint64_t p) {
    if (p >= kMaxPrime || !is_prime_u64(p)) {
        throw InputError(std::to_string(p) + " is not a prime below 2^61");
    }
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::to_string() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
    if (field.is_rational()) {
        q_ = value;
    } else {
        const auto p = static_cast<long long>(field.characteristic());
        long long r = static_cast<long long>(value) % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
    if (field.is_rational()) {
        q_ = value;
        q_.canonicalize();
    } else {
        v_ = reduce_mod(value, field.characteristic());
    }
}

Scalar Scalar::from_residue(Field field, std::uint64_t residue) {
    if (field.is_rational()) throw std::logic_error("from_residue over the rationals");
    Scalar s;
    s.field_ = field;
    s.v_ = residue % field.characteristic();
    return s;
}

Scalar Scalar::parse(Field field, std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InputError("empty scalar");
    mpq_class q;
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        mpz_class z;
        std::string body = part;
        if (!body.empty() && body[0] == '+') body.erase(0, 1);
        const bool ok = !body.empty() && body != "-" &&
                        body.find_first_not_of("-0123456789") == std::string::npos &&
                        body.find('-', 1) == std::string::npos;
        if (!ok || z.set_str(body, 10) != 0) throw InputError("malformed scalar '" + s + "'");
        return z;
    };
    if (slash == std::string::npos) {
        q = parse_int(s);
    } else {
        mpz_class den = parse_int(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + s + "'");
        q = mpq_class(parse_int(s.substr(0, slash)), den);
        q.canonicalize();
    }
    return Scalar(field, q);
}

bool Scalar::is_zero() const noexcept {
    return field_.is_rational() ? sgn(q_) == 0 : v_ == 0;
}

bool Scalar::is_one() const noexcept {
    return field_.is_rational() ? q_ == 1 : v_ == 1;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r;
    r.field_ = field_;
    if (field_.is_rational()) {
        r.q_ = 1 / q_;
    } else {
        r.v_ = inv_mod(v_, field_.characteristic());
    }
    return r;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw std::logic_error("rational() on a prime-field scalar");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) throw std::logic_error("residue() on a rational scalar");
    return v_;
}

std::string Scalar::to_string() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(v_);
}

void Scalar::check_same_field(const Scalar& other) const {
    if (!(field_ == other.field_)) {
        throw std::invalid_argument("scalar field mismatch: " + field_.to_string() + " vs " +
                                    other.field_.to_string());
    }
}

Scalar& Scalar::operator+=(const Scalar& other) {
    check_same_field(other);
    if (field_.is_rational()) {
        q_ += other.q_;
    } else {
        const std::uint64_t p = field_.characteristic();
        v_ += other.v_;
        if (v_ >= p) v_ -= p;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    check_same_field(other);
    if (field_.is_rational()) {
        q_ -= other.q_;
    } else {
        const std::uint64_t p = field_.characteristic();
        v_ = v_ >= other.v_ ? v_ - other.v_ : v_ + p - other.v_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    check_same_field(other);
    if (field_.is_rational()) {
        q_ *= other.q_;
    } else {
        v_ = mul_mod(v_, other.v_, field_.characteristic());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    check_same_field(other);
    return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.is_rational()) {
        r.q_ = -q_;
    } else if (v_ != 0) {
        r.v_ = field_.characteristic() - v_;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.v_ == b.v_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ci2

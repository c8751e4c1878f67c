#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace bhj {

/// Exact rational number. Backed by GMP; always in lowest terms with a
/// positive denominator, so equal values have equal representations.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {} // NOLINT: implicit by design, 0/1 literals are pervasive
    Scalar(long num, long den);

    /// Parses "p" or "p/q", canonicalizing the result.
    static Scalar parse(const std::string& text);

    /// Parses "p" or "p/q" but rejects input that is not already in lowest
    /// terms with a positive denominator ("2/4", "1/-3", "03").
    static Scalar parse_exact(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o); // throws on division by zero

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar reciprocal() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// (-1)^e for an exponent reduced mod 2.
inline Scalar parity_sign(unsigned e) { return (e & 1u) ? Scalar(-1) : Scalar(1); }

} // namespace bhj

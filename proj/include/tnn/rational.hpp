#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tnn {

/// Exact arbitrary-precision fraction, always kept in canonical form
/// (positive denominator, numerator and denominator coprime).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    /// Throws DomainError when d == 0.
    Rational(std::int64_t n, std::int64_t d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(mpz_class n);
    explicit Rational(mpq_class q);

    /// Accepts "n", "n/d" and decimal notation ("-1.25", "3e-2").
    /// Decimals are scaled by powers of ten, never routed through binary floats.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

/// Canonical fraction n/d. Throws DomainError when d == 0.
Rational rational_normalize(std::int64_t n, std::int64_t d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tnn

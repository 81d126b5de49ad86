#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace polyaut {

/// Exact rational number. Canonical form is maintained at all times:
/// gcd(|numerator|, denominator) == 1, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(const mpq_class& v);

    /// Accepts "123", "-4/7" and any string mpq accepts in base 10,
    /// then canonicalizes.
    static Rational from_string(const std::string& text);

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    Rational reciprocal() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational pow(unsigned long e) const;

private:
    mpq_class value_;  // mpq_class keeps the canonical-form invariant
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace polyaut

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rikitake {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number with arbitrary-precision numerator/denominator.
// Always canonical: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& n, const BigInt& d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    // Accepts "n", "n/d" and finite decimals like "-0.25" (converted exactly).
    static Rational from_string(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return a.value_ < b.value_   ? std::strong_ordering::less
               : a.value_ > b.value_ ? std::strong_ordering::greater
                                     : std::strong_ordering::equal;
    }

    Rational inverse() const;
    Rational pow(unsigned k) const;
    Rational abs() const { return value_ < 0 ? Rational(-value_) : *this; }

    double to_double() const { return value_.convert_to<double>(); }

    // "n" or "n/d".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit Rational(Rep v) : value_(std::move(v)) {}

    Rep value_;
};

} // namespace rikitake

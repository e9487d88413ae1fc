#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "ncenter/errors.hpp"

namespace ncenter {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number over arbitrary-precision integers.
// Always in lowest terms, denominator > 0.  The string form "p/q" (or "p"
// for integers) is the interchange format used by the CLI and config files.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    // Parses "p/q" or "p".  Throws MalformedRational / ZeroDenominator.
    static Rational parse(const std::string& text);

    // Lossless round-trip with parse().
    std::string str() const;

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // ZeroDenominator on /0

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

  private:
    void reduce();

    BigInt num_;
    BigInt den_;  // > 0
};

// Exact square root: returns r >= 0 with r*r == s when s is a perfect
// rational square, absent otherwise (including all s < 0).
std::optional<Rational> rat_sqrt(const Rational& s);

}  // namespace ncenter

#ifndef CHB_NUMERIC_HPP
#define CHB_NUMERIC_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "chb/errors.hpp"

namespace chb {

/// Arbitrary-precision signed integer. All bound computations are exact;
/// there is no floating-point mode anywhere in the library.
using Integer = mpz_class;

/// base^exp for a nonnegative exponent.
Integer ipow(const Integer& base, unsigned long exp);

/// n*(n-1)/2, the binomial coefficient C(n,2), for n >= 0.
Integer binom2(const Integer& n);

/// Parses a decimal integer (optional leading '-'). Throws DomainError on
/// malformed input.
Integer parse_integer(const std::string& text);

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; construction and every operation normalize eagerly, so two
/// equal values always compare equal and serialize identically.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);

    /// Parses "p/q" or "p" (decimal, optional sign). Throws DomainError on
    /// malformed input or zero denominator.
    static Rational parse(const std::string& text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }

    /// Largest integer <= value (floor division, exact for negatives).
    Integer floor() const;

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs); // throws DomainError on /0

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend Rational abs(const Rational& r);
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_; // kept canonical
};

/// Decimal rendering of an Integer.
std::string str(const Integer& n);

} // namespace chb

#endif

#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hankel/errors.hpp"

namespace hankel {

// Exact arbitrary-precision integer. Canonical zero, decimal round-trip.
using Int = mpz_class;

Int parse_int(std::string_view s);
std::string int_str(const Int& v);

/// Exact rational scalar: den > 0, gcd(|num|, den) = 1 at all times.
/// Every arithmetic result is renormalized, so equality is structural.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int v) : q_(v) {}
    Rat(long v) : q_(static_cast<signed long>(v)) {}
    Rat(const Int& v) : q_(v) {}
    Rat(const Int& num, const Int& den);

    // Accepts "p/q" or "p" with optional sign, decimal digits only.
    static Rat parse(std::string_view s);

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }
    // v is an integer and v <= bound
    bool is_integer_at_most(long bound) const;
    // v is an integer and v >= 0
    bool is_nonneg_integer() const;
    long to_long() const; // requires integer fitting long

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat abs() const;
    Rat inv() const;
    // Integer power, negative exponents allowed (0^e throws for e < 0).
    Rat pow(long e) const;

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_; // canonical at all times
};

/// Generalized binomial coefficient C(lambda, n) = lambda(lambda-1)...(lambda-n+1)/n!.
Rat generalized_binomial(const Rat& lambda, long n);

Int factorial(long n);

} // namespace hankel

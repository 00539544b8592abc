#pragma once

#include <string>

#include "updyn/integer.hpp"

namespace updyn {

// Exact rational with a power-of-two denominator: num / 2^exp.
// This is the value class of every sequence-space metric quantity; the
// defining inequalities (>= 1, <= 1/2^n) are decided exactly on it.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    explicit Dyadic(const Integer& n) : num_(n), exp_(0) {}
    explicit Dyadic(long n) : num_(n), exp_(0) {}
    Dyadic(Integer num, unsigned long exp) : num_(std::move(num)), exp_(exp) { normalize(); }

    static Dyadic one_over_pow2(unsigned long q) { return Dyadic(Integer(1), q); }

    const Integer& num() const { return num_; }
    unsigned long exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return sgn(num_); }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;

    // Exact multiply by 2^k (k may be negative).
    Dyadic times_pow2(long k) const;

    // <0, 0, >0 like the value of *this - o.
    int compare(const Dyadic& o) const;

    bool operator==(const Dyadic& o) const { return compare(o) == 0; }
    bool operator!=(const Dyadic& o) const { return compare(o) != 0; }
    bool operator<(const Dyadic& o) const { return compare(o) < 0; }
    bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
    bool operator>(const Dyadic& o) const { return compare(o) > 0; }
    bool operator>=(const Dyadic& o) const { return compare(o) >= 0; }

    Rational to_rational() const;

    // Canonical "p/2^q" form, e.g. "1/2^0", "3/2^5".
    std::string str() const;

    // Accepts "p" or "p/2^q"; throws std::invalid_argument otherwise.
    static Dyadic parse(const std::string& s);

private:
    void normalize();

    Integer num_;
    unsigned long exp_;
};

}  // namespace updyn

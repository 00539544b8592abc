#pragma once

#include <string>

#include "updyn/integer.hpp"

namespace updyn {

// Closed rational interval [lo, hi]; the enclosure currency of the smooth
// systems. Operations are outward-exact: every result contains the true
// image set, with equality whenever the operation is exact on rationals.
class RatInterval {
public:
    RatInterval() : lo_(0), hi_(0) {}
    explicit RatInterval(const Rational& point) : lo_(point), hi_(point) {}
    RatInterval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const;
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RatInterval& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }
    bool intersects(const RatInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    RatInterval operator+(const RatInterval& o) const;
    RatInterval operator-(const RatInterval& o) const;
    RatInterval operator*(const RatInterval& o) const;

    static RatInterval hull(const RatInterval& a, const RatInterval& b);

    std::string str() const;   // "[lo, hi]"

private:
    Rational lo_, hi_;
};

RatInterval operator*(const Rational& c, const RatInterval& v);
RatInterval operator+(const Rational& c, const RatInterval& v);
RatInterval operator-(const Rational& c, const RatInterval& v);

// Tight square: stays non-negative even when the interval straddles zero,
// unlike v * v.
RatInterval square(const RatInterval& v);

// Largest rational p/q with p/q <= sqrt(x) among denominators q = d * 2^bits
// (d the denominator of x), and the matching upper bound. Exact when x is a
// ratio of perfect squares. x must be non-negative.
Rational sqrt_lower(const Rational& x, unsigned long bits);
Rational sqrt_upper(const Rational& x, unsigned long bits);

// Outward square-root enclosure of a non-negative interval.
RatInterval sqrt_enclosure(const RatInterval& v, unsigned long bits);

// Round toward -inf / +inf onto the grid of multiples of 2^-bits.
Rational round_down(const Rational& x, unsigned long bits);
Rational round_up(const Rational& x, unsigned long bits);

// Smallest dyadic-endpoint interval at 2^-bits granularity containing v.
// Applied between iterated map steps to keep denominators from compounding.
RatInterval round_outward(const RatInterval& v, unsigned long bits);

// Axis-aligned planar box.
struct Box2 {
    RatInterval x;
    RatInterval y;

    bool contains(const Box2& inner) const { return x.contains(inner.x) && y.contains(inner.y); }
    std::string str() const;
};

}  // namespace updyn

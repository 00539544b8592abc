#include "updyn/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace updyn {

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::domain_error("interval endpoints out of order");
}

Rational RatInterval::mid() const {
    Rational m = (lo_ + hi_) / 2;
    m.canonicalize();
    return m;
}

RatInterval RatInterval::operator+(const RatInterval& o) const { return RatInterval(lo_ + o.lo_, hi_ + o.hi_); }

RatInterval RatInterval::operator-(const RatInterval& o) const { return RatInterval(lo_ - o.hi_, hi_ - o.lo_); }

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    return RatInterval(std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d)));
}

RatInterval RatInterval::hull(const RatInterval& a, const RatInterval& b) {
    return RatInterval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

std::string RatInterval::str() const { return "[" + to_decimal(lo_) + ", " + to_decimal(hi_) + "]"; }

RatInterval operator*(const Rational& c, const RatInterval& v) {
    if (c >= 0) return RatInterval(c * v.lo(), c * v.hi());
    return RatInterval(c * v.hi(), c * v.lo());
}

RatInterval operator+(const Rational& c, const RatInterval& v) { return RatInterval(c + v.lo(), c + v.hi()); }

RatInterval operator-(const Rational& c, const RatInterval& v) { return RatInterval(c - v.hi(), c - v.lo()); }

RatInterval square(const RatInterval& v) {
    Rational a = v.lo() * v.lo();
    Rational b = v.hi() * v.hi();
    if (v.lo() >= 0) return RatInterval(a, b);
    if (v.hi() <= 0) return RatInterval(b, a);
    return RatInterval(Rational(0), std::max(a, b));
}

namespace {

// Both bounds share this shape: sqrt(n/d) = sqrt(n*d)/d, then integer
// square roots of n*d*4^bits against denominator d*2^bits.
Rational sqrt_bound(const Rational& x, unsigned long bits, bool upper) {
    if (x < 0) throw std::domain_error("square root of a negative interval");
    const Integer& n = x.get_num();
    const Integer& d = x.get_den();
    if (n == 0) return Rational(0);
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
        Rational exact(isqrt_floor(n), isqrt_floor(d));
        exact.canonicalize();
        return exact;
    }
    Integer scaled = n * d;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Integer root = upper ? isqrt_ceil(scaled) : isqrt_floor(scaled);
    Integer den = d;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rational out(root, den);
    out.canonicalize();
    return out;
}

}  // namespace

Rational sqrt_lower(const Rational& x, unsigned long bits) { return sqrt_bound(x, bits, false); }

Rational sqrt_upper(const Rational& x, unsigned long bits) { return sqrt_bound(x, bits, true); }

RatInterval sqrt_enclosure(const RatInterval& v, unsigned long bits) {
    return RatInterval(sqrt_lower(v.lo(), bits), sqrt_upper(v.hi(), bits));
}

namespace {

Rational grid_round(const Rational& x, unsigned long bits, bool up) {
    Integer num = x.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
    Integer q;
    if (up)
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rational out(q, pow2(bits));
    out.canonicalize();
    return out;
}

}  // namespace

Rational round_down(const Rational& x, unsigned long bits) { return grid_round(x, bits, false); }

Rational round_up(const Rational& x, unsigned long bits) { return grid_round(x, bits, true); }

RatInterval round_outward(const RatInterval& v, unsigned long bits) {
    return RatInterval(round_down(v.lo(), bits), round_up(v.hi(), bits));
}

std::string Box2::str() const { return x.str() + " x " + y.str(); }

}  // namespace updyn

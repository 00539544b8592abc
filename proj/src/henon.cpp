#include "updyn/henon.hpp"

#include <stdexcept>

namespace updyn {

bool henon_region_check(const Rational& alpha, const Rational& beta) {
    if (beta == 0) throw std::domain_error("the region is defined for nonzero beta");
    Rational b = abs(beta);
    Rational denom = (1 + b) * (1 + b);
    Rational c = Rational(4) * alpha / denom - 5;
    c.canonicalize();
    if (c < 0) return false;
    return c * c >= 20;
}

HenonSystem::HenonSystem(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (!henon_region_check(alpha_, beta_))
        throw std::domain_error("(alpha, beta) lies outside the certified parameter region");
}

Box2 henon_step(const Rational& alpha, const Rational& beta, const Box2& p) {
    RatInterval x2 = square(p.x);
    RatInterval nx = alpha - (beta * p.y + x2);
    return Box2{nx, p.x};
}

Box2 henon_step(const HenonSystem& sys, const Box2& p) { return henon_step(sys.alpha(), sys.beta(), p); }

}  // namespace updyn

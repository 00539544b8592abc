#pragma once

#include "updyn/interval.hpp"

namespace updyn {

// Decides alpha >= (5 + 2*sqrt(5)) * (1 + |beta|)^2 / 4 exactly: with
// c = 4*alpha / (1 + |beta|)^2 - 5 the condition is c >= 2*sqrt(5), i.e.
// c >= 0 and c^2 >= 20, which needs no irrational arithmetic at all.
// beta must be nonzero.
bool henon_region_check(const Rational& alpha, const Rational& beta);

// The plane map (x, y) -> (alpha - beta*y - x^2, x), restricted at
// construction to the parameter region where the invariant set carries full
// shift dynamics.
class HenonSystem {
public:
    HenonSystem(Rational alpha, Rational beta);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

private:
    Rational alpha_, beta_;
};

// Outward image box; the only nonlinearity is x^2, handled by the tight
// interval square.
Box2 henon_step(const HenonSystem& sys, const Box2& p);

// Same image for raw parameters, without the region gate; iteration outside
// the certified region is legal, it just certifies nothing.
Box2 henon_step(const Rational& alpha, const Rational& beta, const Box2& p);

}  // namespace updyn

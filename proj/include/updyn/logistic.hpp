#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "updyn/interval.hpp"
#include "updyn/word.hpp"

namespace updyn {

// The quadratic family x -> mu*x*(1-x) for mu > 4, where the invariant set
// is a Cantor set carried by the two branch intervals I0 = [0, x-] and
// I1 = [x+, 1], x-+ the roots of mu*x*(1-x) = 1. Roots are held as exact
// rational enclosures at the configured square-root precision.
class LogisticSystem {
public:
    explicit LogisticSystem(Rational mu, unsigned long precision_bits = 64);

    const Rational& mu() const { return mu_; }
    unsigned long precision_bits() const { return prec_; }

    // Enclosures of the branch-boundary roots x- and x+. Exact (point
    // intervals) when 1 - 4/mu is a square, e.g. mu = 9/2.
    const RatInterval& root_minus() const { return root_minus_; }
    const RatInterval& root_plus() const { return root_plus_; }

    // Certified-candidate hulls [0, hi(x-)] and [lo(x+), 1]: a point whose
    // full forward orbit stays in these hulls lies in I0/I1 whenever it has
    // an itinerary at all, because the open middle gap carries no invariant
    // points.
    const RatInterval& branch0_hull() const { return hull0_; }
    const RatInterval& branch1_hull() const { return hull1_; }

private:
    Rational mu_;
    unsigned long prec_;
    RatInterval root_minus_, root_plus_;
    RatInterval hull0_, hull1_;
};

// Exact range of the map over an interval (the parabola is monotone off its
// vertex, so no dependency widening): the tightest possible enclosure.
RatInterval logistic_step(const LogisticSystem& sys, const RatInterval& x);

struct ItineraryResult {
    FiniteWord word;                        // decided prefix
    std::optional<unsigned> undecided_at;   // step index of the first failure

    bool decided() const { return !undecided_at.has_value(); }
};

// Branch symbols of the forward orbit of the enclosure. At each step the
// box is intersected with the two candidate hulls first: mass provably in
// the escape gap or outside [0, 1] carries no invariant points and is
// discarded. A box left with mass in both hulls (a genuine straddle), or
// with none, is undecided at that step. The reported word is therefore the
// true itinerary prefix of every point of the input box that has one.
ItineraryResult itinerary(const LogisticSystem& sys, const RatInterval& x, unsigned length);

// Nested preimage enclosure of the cylinder of w under the inverse branches
//   g0(y) = (1 - sqrt(1 - 4y/mu)) / 2,   g1(y) = (1 + sqrt(1 - 4y/mu)) / 2,
// applied right to left starting from [0, 1]. Square roots are rounded
// outward, so the box contains the full cylinder; itinerary() on the result
// decides exactly the symbols of w.
RatInterval point_for(const LogisticSystem& sys, const FiniteWord& w);

// point_for on the first `depth` symbols of the one-sided listed sequence:
// an enclosure of the conjugate image of the unpredictable point, shrinking
// as depth grows.
RatInterval transport_unpredictable_point(const LogisticSystem& sys, unsigned depth);

struct CommutationReport {
    unsigned checked = 0;
    unsigned failures = 0;
    std::vector<FiniteWord> failed_words;   // first few failures, for diagnostics
    bool passed = false;
};

// Finite-depth shadow of the conjugacy equation h(sigma(w)) = f(h(w)):
// for each word, the step image of its cylinder box must have itinerary
// equal to the shifted word, fully decided. Words are `samples` random
// draws of the given length from a fixed-seed generator.
CommutationReport conjugacy_commutation_check(const LogisticSystem& sys, unsigned word_length, unsigned samples,
                                              std::uint64_t seed = 0x5eed0f2a11dULL);

// Commutation check for one explicit word; empty optional when the image
// itinerary is undecided before |w| - 1 symbols.
bool commutation_holds(const LogisticSystem& sys, const FiniteWord& w);

}  // namespace updyn

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "updyn/interval.hpp"
#include "updyn/word.hpp"

namespace updyn {

// A two-sided symbol word with a dot marking time zero, e.g. "01.000" for
// a_{-2} a_{-1} . a_0 a_1 a_2. Past symbols are stored outward from the dot
// (index 0 holds a_{-1}).
struct TwoSidedWord {
    FiniteWord past;     // a_{-1}, a_{-2}, ...
    FiniteWord future;   // a_0, a_1, ...

    static TwoSidedWord parse(std::string_view s);
    std::string str() const;
};

// Affine horseshoe on the unit square: contraction lambda on the two
// horizontal strips H0 = [0,1]x[0,lambda], H1 = [0,1]x[1-lambda,1] and
// expansion mu_e on the vertical strips V0 = [0,1/mu_e]x[0,1],
// V1 = [1-1/mu_e,1]x[0,1]. The map sends V0 to H0 by (x,y) -> (mu_e x,
// lambda y) and V1 to H1 by (x,y) -> (mu_e(1-x), 1-lambda y), the second
// branch with the orientation flip of the fold.
class HorseshoeSystem {
public:
    explicit HorseshoeSystem(Rational lambda = Rational(1, 3), Rational mu_e = Rational(3));

    const Rational& lambda() const { return lambda_; }
    const Rational& mu_e() const { return mu_; }

    Box2 v_strip(int symbol) const;
    Box2 h_strip(int symbol) const;

private:
    Rational lambda_, mu_;
};

// Image box under the branch the box certifiably sits in; empty when the
// box straddles the vertical strips (or leaves the square).
std::optional<Box2> horseshoe_step(const HorseshoeSystem& sys, const Box2& p);

struct HorseshoeItinerary {
    FiniteWord forward;    // a_0 .. a_{F-1}
    FiniteWord backward;   // a_{-1}, a_{-2}, ... outward
    std::optional<unsigned> forward_undecided_at;    // forward step index
    std::optional<unsigned> backward_undecided_at;   // m for symbol a_{-m}, m >= 1

    bool decided() const { return !forward_undecided_at && !backward_undecided_at; }
};

// Forward symbols from vertical-strip membership of forward images,
// backward symbols from horizontal-strip membership of backward images
// (p in H_j exactly when its preimage lies in V_j). All arithmetic is
// exact rational, so decidability is a property of the box, not of
// rounding.
HorseshoeItinerary horseshoe_itinerary(const HorseshoeSystem& sys, const Box2& p, unsigned forward_len,
                                       unsigned backward_len);

// The closed box of all points whose itinerary matches w around the dot:
// x-interval from nested preimages of the future symbols (width
// mu_e^-|future|), y-interval from nested images of the past symbols
// (width lambda^|past|). box_for(".0") is exactly V0.
Box2 horseshoe_box_for(const HorseshoeSystem& sys, const TwoSidedWord& w);

}  // namespace updyn

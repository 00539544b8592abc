#include "updyn/logistic.hpp"

#include <random>
#include <stdexcept>

#include "updyn/star.hpp"

namespace updyn {

LogisticSystem::LogisticSystem(Rational mu, unsigned long precision_bits)
    : mu_(std::move(mu)), prec_(precision_bits) {
    if (mu_ <= 4) throw std::domain_error("the branch construction needs mu > 4");
    Rational disc = 1 - Rational(4) / mu_;
    disc.canonicalize();
    RatInterval root = sqrt_enclosure(RatInterval(disc), prec_);
    Rational half(1, 2);
    root_minus_ = RatInterval((1 - root.hi()) / 2, (1 - root.lo()) / 2);
    root_plus_ = RatInterval((1 + root.lo()) / 2, (1 + root.hi()) / 2);
    if (!(root_minus_.hi() < root_plus_.lo()))
        throw std::domain_error("precision too low to separate the branch intervals");
    hull0_ = RatInterval(Rational(0), root_minus_.hi());
    hull1_ = RatInterval(root_plus_.lo(), Rational(1));
}

RatInterval logistic_step(const LogisticSystem& sys, const RatInterval& x) {
    // mu*x*(1-x) is concave with vertex at 1/2; the exact range needs only
    // the endpoint values plus the vertex when it is interior.
    Rational fa = sys.mu() * x.lo() * (1 - x.lo());
    Rational fb = sys.mu() * x.hi() * (1 - x.hi());
    fa.canonicalize();
    fb.canonicalize();
    Rational lo = std::min(fa, fb);
    Rational hi = std::max(fa, fb);
    Rational half(1, 2);
    if (x.lo() <= half && half <= x.hi()) {
        Rational peak = sys.mu() / 4;
        peak.canonicalize();
        hi = peak;
    }
    return RatInterval(lo, hi);
}

namespace {

struct ClipOutcome {
    int symbol;   // 0, 1, or -1 for undecided
    RatInterval box;
};

// Intersect with the two candidate hulls; provable-gap and escaped mass
// carries no invariant points, so discarding it preserves every point that
// has an itinerary.
ClipOutcome clip_to_hulls(const LogisticSystem& sys, const RatInterval& b) {
    const RatInterval& h0 = sys.branch0_hull();
    const RatInterval& h1 = sys.branch1_hull();
    bool in0 = b.intersects(h0);
    bool in1 = b.intersects(h1);
    if (in0 == in1) return ClipOutcome{-1, b};   // straddle or fully escaped
    const RatInterval& h = in0 ? h0 : h1;
    return ClipOutcome{in0 ? 0 : 1,
                       RatInterval(std::max(b.lo(), h.lo()), std::min(b.hi(), h.hi()))};
}

RatInterval inverse_branch(const LogisticSystem& sys, int symbol, const RatInterval& y) {
    // 1 - 4y/mu over the incoming interval; y stays within [0, 1] along the
    // nesting, so the argument stays non-negative for mu > 4.
    Rational scale = Rational(4) / sys.mu();
    scale.canonicalize();
    RatInterval arg = Rational(1) - scale * y;
    if (arg.lo() < 0) arg = RatInterval(Rational(0), std::max(arg.hi(), Rational(0)));
    RatInterval s = sqrt_enclosure(arg, sys.precision_bits());
    if (symbol == 0) return RatInterval((1 - s.hi()) / 2, (1 - s.lo()) / 2);
    return RatInterval((1 + s.lo()) / 2, (1 + s.hi()) / 2);
}

}  // namespace

ItineraryResult itinerary(const LogisticSystem& sys, const RatInterval& x, unsigned length) {
    if (length == 0) throw std::domain_error("itinerary length must be at least 1");
    ItineraryResult out;
    RatInterval b = x;
    for (unsigned k = 0; k < length; ++k) {
        ClipOutcome c = clip_to_hulls(sys, b);
        if (c.symbol < 0) {
            out.undecided_at = k;
            return out;
        }
        out.word.push_back(c.symbol);
        if (k + 1 < length)
            b = round_outward(logistic_step(sys, c.box), sys.precision_bits());
    }
    return out;
}

RatInterval point_for(const LogisticSystem& sys, const FiniteWord& w) {
    if (w.empty()) throw std::domain_error("point_for needs a non-empty word");
    RatInterval b(Rational(0), Rational(1));
    for (std::size_t i = w.length(); i-- > 0;) b = inverse_branch(sys, w.symbol(i), b);
    return b;
}

RatInterval transport_unpredictable_point(const LogisticSystem& sys, unsigned depth) {
    if (depth == 0) throw std::domain_error("transport depth must be at least 1");
    FiniteWord w;
    for (unsigned i = 0; i < depth; ++i) w.push_back(star_symbol_one_sided(Integer(static_cast<long>(i))));
    return point_for(sys, w);
}

bool commutation_holds(const LogisticSystem& sys, const FiniteWord& w) {
    if (w.length() < 2) throw std::domain_error("commutation needs a word of length at least 2");
    RatInterval image = logistic_step(sys, point_for(sys, w));
    ItineraryResult it = itinerary(sys, image, static_cast<unsigned>(w.length() - 1));
    if (!it.decided()) return false;
    return it.word == w.suffix_from(1);
}

CommutationReport conjugacy_commutation_check(const LogisticSystem& sys, unsigned word_length, unsigned samples,
                                              std::uint64_t seed) {
    if (word_length < 2) throw std::domain_error("commutation needs words of length at least 2");
    CommutationReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> bit(0, 1);
    for (unsigned i = 0; i < samples; ++i) {
        FiniteWord w;
        for (unsigned j = 0; j < word_length; ++j) w.push_back(bit(rng));
        ++rep.checked;
        if (!commutation_holds(sys, w)) {
            ++rep.failures;
            if (rep.failed_words.size() < 16) rep.failed_words.push_back(w);
        }
    }
    rep.passed = rep.failures == 0;
    return rep;
}

}  // namespace updyn

#pragma once

#include <iosfwd>

#include "updyn/dyadic.hpp"
#include "updyn/stream.hpp"

namespace updyn {

inline constexpr unsigned long kDefaultRadiusCap = 4096;

// Three-valued outcome of a decision procedure on infinite objects.
// `unknown` means the configured window cap was hit before a sound decision.
enum class Ternary { yes, no, unknown };

const char* to_string(Ternary t);

struct IndexWindow {
    Integer lo;
    Integer hi;
};

// Exact lower bound plus exact tail mass for the infinite-sum metric
//   d[s, r] = sum |s_k - r_k| / 2^|k|.
// The true value lies in [partial_sum, partial_sum + tail_bound].
class DyadicEnclosure {
public:
    DyadicEnclosure(StreamKind kind, Dyadic partial_sum, Dyadic tail_bound, IndexWindow window);

    const Dyadic& partial_sum() const { return partial_sum_; }
    const Dyadic& tail_bound() const { return tail_bound_; }
    Dyadic upper() const { return partial_sum_ + tail_bound_; }
    const IndexWindow& window() const { return window_; }
    StreamKind kind() const { return kind_; }

    // True when [lo, hi] of *this lies inside [lo, hi] of `outer`.
    bool contained_in(const DyadicEnclosure& outer) const;

private:
    StreamKind kind_;
    Dyadic partial_sum_;
    Dyadic tail_bound_;
    IndexWindow window_;
};

// Exact finite sum over the central window plus the exact remaining geometric
// mass: tail 2^-R one-sided, 2^-(R-1) bi-infinite, for window radius R.
// Streams must share a kind; a mismatch throws std::domain_error.
DyadicEnclosure metric(const SymbolStream& s, const SymbolStream& r, unsigned long window_radius);

// Sound decision of d[s, r] >= threshold. Widens the window until the partial
// sum reaches the threshold (yes), the whole enclosure drops below it (no),
// or the radius cap is hit (unknown). Requires threshold > 0.
Ternary metric_at_least(const SymbolStream& s, const SymbolStream& r, const Dyadic& threshold,
                        unsigned long radius_cap = kDefaultRadiusCap);

struct AgreementResult {
    enum class Kind { mismatch_at_origin, radius, exceeds_cap };
    Kind kind;
    unsigned long radius = 0;   // meaningful only for Kind::radius

    bool at_least(unsigned long n) const {
        return kind == Kind::exceeds_cap || (kind == Kind::radius && radius >= n);
    }
};

// Largest n <= cap with symbol agreement on the full window |i| <= n
// (bi-infinite) or 0 <= i <= n (one-sided).
AgreementResult agreement_radius(const SymbolStream& s, const SymbolStream& r, unsigned long cap);

}  // namespace updyn

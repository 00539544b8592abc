#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "updyn/metric.hpp"
#include "updyn/scan.hpp"
#include "updyn/star.hpp"
#include "updyn/stream.hpp"
#include "updyn/word.hpp"

namespace updyn {

// minimal: least shift found by scan. canonical: the block-occurrence shift
// from index arithmetic (star-backed streams only). The listed lower bounds
// on return times attach to canonical choices; minimal returns can be
// smaller.
enum class ReturnMode { minimal, canonical };

const char* to_string(ReturnMode m);

// Thrown when a bounded search exhausts its horizon without a witness.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchLimits {
    Integer horizon = Integer(1) << 20;
    unsigned long radius_cap = kDefaultRadiusCap;
};

struct CertificateEntry {
    unsigned depth = 0;           // n
    Integer return_time;          // t_n, strictly increasing across entries
    Integer separation_time;      // tau_n, strictly increasing across entries
    Dyadic proximity_bound;       // verified: d[sigma^t(p), p] <= bound <= 2^-n (2^-(n-1) bi)
    bool separation_verified = false;   // d[sigma^(t+tau)(p), sigma^tau(p)] >= epsilon0
};

// Finite verified prefix of the unpredictability data: epsilon0 together
// with return times {t_n} and separation times {tau_n}. Self-verifying:
// re-running the recorded times through the metric oracle reproduces every
// bound.
struct UnpredictabilityCertificate {
    StreamKind kind = StreamKind::one_sided;
    std::string subject;
    Dyadic epsilon0;
    std::vector<CertificateEntry> entries;

    bool all_verified() const;
};

// Sensitivity constant used for shift systems: an origin-symbol mismatch
// puts the metric at 1 or above, exactly.
Dyadic shift_epsilon0();

// Verified proximity bound implied by window agreement of radius n.
Dyadic proximity_bound_for(StreamKind kind, unsigned n);

// Return-time search at depth n: a shift t with sigma^t(s) agreeing with s
// on the whole window. minimal scans [min_t, horizon]; canonical computes
// the occurrence of the central window inside its own-length block segment
// (extending the window as needed to respect min_t). Both verify agreement
// before returning. Empty result = horizon exhausted (minimal only).
std::optional<Integer> find_return_time(const SymbolStream& s, unsigned n, ReturnMode mode,
                                        const SearchLimits& limits = {}, const Integer& min_t = Integer(1));

// Least tau >= min_tau with an origin-symbol mismatch between
// sigma^(t+tau)(s) and sigma^tau(s); such a mismatch certifies metric >= 1.
std::optional<Integer> find_separation_time(const SymbolStream& s, const Integer& t, const Integer& min_tau,
                                            const SearchLimits& limits = {});

// Lower bound the canonical return time construction guarantees at depth n:
// sum_{j=1}^n j*2^j one-sided, n + sum_{k=1}^{2n+1} k*2^(k-1) bi-infinite.
Integer canonical_return_lower_bound(StreamKind kind, unsigned n);

// Full pipeline: for each n in 1..n_max a verified entry. Throws
// SearchExhausted if any sub-search fails (e.g. a periodic stream at the
// separation step). Both time sequences are made strictly increasing by
// restarting searches past the previous hit.
UnpredictabilityCertificate certify_unpredictable(const SymbolStream& s, unsigned n_max,
                                                  ReturnMode mode = ReturnMode::minimal,
                                                  const SearchLimits& limits = {});

// Certificate for sigma^k(s), k >= 0: same return times, same epsilon0,
// separation times tau_n - k. Entries whose depth or separation time does
// not survive the shift are dropped; survivors are re-verified directly and
// re-labelled at depth n - k. An empty certificate (k past every entry) is
// a legal outcome.
UnpredictabilityCertificate transport_certificate(const SymbolStream& s, const UnpredictabilityCertificate& cert,
                                                  const Integer& k, const SearchLimits& limits = {});

struct PoissonEntry {
    unsigned depth = 0;
    Integer time;
    Dyadic proximity_bound;
};

// Positive Poisson returns: strictly increasing times with verified
// approach bounds. Works on any stream (minimal mode); canonical mode needs
// a star-backed stream.
std::vector<PoissonEntry> certify_poisson_positive(const SymbolStream& s, unsigned n_max,
                                                   ReturnMode mode = ReturnMode::minimal,
                                                   const SearchLimits& limits = {});

// Negative returns (bi-infinite only): strictly decreasing times t <= -1.
std::vector<PoissonEntry> certify_poisson_negative(const SymbolStream& s, unsigned n_max,
                                                   ReturnMode mode = ReturnMode::minimal,
                                                   const SearchLimits& limits = {});

struct DensityHit {
    FiniteWord word;
    Integer shift_right;                  // matching shift from the right-side occurrence
    std::optional<Integer> shift_left;    // bi-infinite: matching negative shift
    bool verified = false;
};

struct DensityReport {
    StreamKind kind = StreamKind::one_sided;
    unsigned window = 0;   // word length (one-sided) or pattern radius (bi-infinite)
    std::vector<DensityHit> hits;
    bool all_found = false;
};

// Exhaustive finite-resolution transitivity check on a star-backed stream:
// one-sided, every word of length L matched at a computed shift; bi-infinite,
// every central pattern of radius `window` matched at a positive and at a
// negative shift.
DensityReport density_check(const SymbolStream& s, unsigned window);

// Per-period aperiodicity witnesses over indices [0, index_hi]: for each
// q in [1, max_period], the least i with s(i) != s(i+q).
struct AperiodicityReport {
    unsigned long max_period = 0;
    std::vector<std::optional<Integer>> witnesses;   // index q-1
    bool all_found = false;
};

AperiodicityReport aperiodicity_check(const SymbolStream& s, unsigned long max_period, const Integer& index_hi);

// The shift dynamics over the orbit closure of a designated unpredictable
// point. Steps are sigma; bi-infinite systems also invert. States are
// immutable streams; the distance is the exact metric enclosure.
class ShiftSystem {
public:
    explicit ShiftSystem(SymbolStream designated);

    const SymbolStream& designated() const { return designated_; }
    StreamKind kind() const { return designated_.kind(); }
    bool is_flow() const { return kind() == StreamKind::bi_infinite; }

    SymbolStream step(const SymbolStream& x) const { return shift(x, Integer(1)); }
    SymbolStream inverse_step(const SymbolStream& x) const;
    SymbolStream orbit_point(const Integer& t) const { return shift(designated_, t); }
    DyadicEnclosure distance(const SymbolStream& a, const SymbolStream& b, unsigned long radius) const {
        return metric(a, b, radius);
    }

private:
    SymbolStream designated_;
};

struct SensitivityWitness {
    Integer base_offset;             // r = sigma^offset(designated) for the on-orbit case
    Integer witness_shift;           // u_delta = sigma^shift(r)
    Dyadic delta;
    Dyadic proximity_upper;          // verified bound on d(u_delta, r), < delta
    Integer time;                    // tau_delta
    Dyadic separation_lower_bound;   // verified: d at the witness time >= this
};

// On-orbit branch: r = sigma^(orbit_offset)(designated). The witness is a
// deep return of r itself, so the separation achieves the full epsilon0.
std::optional<SensitivityWitness> sensitivity_witness_on_orbit(const ShiftSystem& sys, const Integer& orbit_offset,
                                                               const Dyadic& delta,
                                                               const SearchLimits& limits = {});

struct SensitivityOutcome {
    std::optional<SensitivityWitness> witness;
    Dyadic deepest_separation;   // best verified separation seen, witness or not
};

// General entry point mirroring the two proof branches: states sharing the
// designated rule are handled on-orbit; anything else is approached through
// orbit points within delta/2 and certified at epsilon0/2.
SensitivityOutcome sensitivity_witness(const ShiftSystem& sys, const SymbolStream& r, const Dyadic& delta,
                                       const Integer& orbit_scan_horizon, const SearchLimits& limits = {});

}  // namespace updyn

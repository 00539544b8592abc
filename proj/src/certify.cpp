#include "updyn/certify.hpp"

#include <sstream>
#include <utility>

namespace updyn {

namespace {

std::string describe_subject(const SymbolStream& s) {
    if (s.offset() == 0) return s.description();
    std::ostringstream os;
    os << "sigma^" << to_decimal(s.offset()) << "(" << s.description() << ")";
    return os.str();
}

// The certification window at depth n, read off the stream itself:
// s(0..n) one-sided, s(-n..n) bi-infinite.
FiniteWord central_window(const SymbolStream& s, unsigned n) {
    FiniteWord w;
    if (s.kind() == StreamKind::one_sided) {
        for (unsigned i = 0; i <= n; ++i) w.push_back(s.symbol(Integer(static_cast<long>(i))));
    } else {
        for (long i = -static_cast<long>(n); i <= static_cast<long>(n); ++i) w.push_back(s.symbol(Integer(i)));
    }
    return w;
}

bool window_agrees(const SymbolStream& s, const Integer& t, unsigned n) {
    return agreement_radius(shift(s, t), s, n).at_least(n);
}

[[noreturn]] void unverified(const char* what, const Integer& t, unsigned n) {
    std::ostringstream os;
    os << what << " produced t=" << to_decimal(t) << " that fails window verification at depth " << n;
    throw std::logic_error(os.str());
}

// Canonical return time: occurrence of the depth-n central window at the
// start of its own block in the listing, extended to deeper windows until
// the shift clears min_t. Verified before returning.
Integer canonical_return(const SymbolStream& s, unsigned n, const Integer& min_t) {
    if (!is_star_backed(s))
        throw std::domain_error("canonical return times are defined only for listing-backed streams");
    const Integer& a = s.offset();
    for (unsigned d = n;; ++d) {
        if (d > n + 100000) throw std::logic_error("canonical return extension failed to clear min_t");
        Integer t;
        if (s.kind() == StreamKind::one_sided) {
            t = one_sided_block_start(central_window(s, d)) - a;
        } else {
            FiniteWord block = central_window(s, d);
            block.push_back(0);   // odd rank: the block sits on the right side
            t = bi_right_block_start(block) + static_cast<long>(d) - a;
        }
        if (t >= min_t) {
            if (!window_agrees(s, t, d)) unverified("canonical return arithmetic", t, d);
            return t;
        }
    }
}

// Canonical negative return (bi-infinite): the even-rank twin of the
// central window placed on the left side, deepened until the shift is at
// most max_t.
Integer canonical_return_negative(const SymbolStream& s, unsigned n, const Integer& max_t) {
    if (!is_star_backed(s))
        throw std::domain_error("canonical return times are defined only for listing-backed streams");
    const Integer& a = s.offset();
    for (unsigned d = n;; ++d) {
        if (d > n + 100000) throw std::logic_error("canonical negative return extension failed to clear max_t");
        FiniteWord block = central_window(s, d);
        block.push_back(1);   // even rank: the block sits on the left side
        Integer t = bi_left_block_start(block) + static_cast<long>(d) - a;
        if (t <= max_t) {
            if (!window_agrees(s, t, d)) unverified("canonical negative return arithmetic", t, d);
            return t;
        }
    }
}

unsigned least_depth_with_bound_below(StreamKind kind, const Dyadic& delta) {
    if (delta.sign() <= 0) throw std::domain_error("delta must be positive");
    for (unsigned m = 1;; ++m) {
        if (proximity_bound_for(kind, m) < delta) return m;
        if (m > 1000000) throw std::logic_error("unreasonably small delta");
    }
}

}  // namespace

const char* to_string(ReturnMode m) { return m == ReturnMode::minimal ? "minimal" : "canonical"; }

bool UnpredictabilityCertificate::all_verified() const {
    for (const auto& e : entries) {
        if (!e.separation_verified) return false;
        if (e.proximity_bound > proximity_bound_for(kind, e.depth)) return false;
    }
    return true;
}

Dyadic shift_epsilon0() { return Dyadic(1); }

Dyadic proximity_bound_for(StreamKind kind, unsigned n) {
    if (kind == StreamKind::one_sided) return Dyadic::one_over_pow2(n);
    return n == 0 ? Dyadic(2) : Dyadic::one_over_pow2(n - 1);
}

std::optional<Integer> find_return_time(const SymbolStream& s, unsigned n, ReturnMode mode,
                                        const SearchLimits& limits, const Integer& min_t) {
    if (n == 0) throw std::domain_error("return depth must be at least 1");
    Integer lo = min_t < 1 ? Integer(1) : min_t;
    if (mode == ReturnMode::canonical) return canonical_return(s, n, lo);
    auto t = first_window_return(s, n, ScanRange{lo, limits.horizon});
    if (t && !window_agrees(s, *t, n)) unverified("return scan", *t, n);
    return t;
}

std::optional<Integer> find_separation_time(const SymbolStream& s, const Integer& t, const Integer& min_tau,
                                            const SearchLimits& limits) {
    Integer lo = min_tau < 1 ? Integer(1) : min_tau;
    return first_difference(shift(s, t), s, ScanRange{lo, limits.horizon});
}

Integer canonical_return_lower_bound(StreamKind kind, unsigned n) {
    if (kind == StreamKind::one_sided) return one_sided_segment_start(n + 1);
    return Integer(static_cast<long>(n)) + bi_segment_start_right(2 * n + 2);
}

UnpredictabilityCertificate certify_unpredictable(const SymbolStream& s, unsigned n_max, ReturnMode mode,
                                                  const SearchLimits& limits) {
    UnpredictabilityCertificate cert;
    cert.kind = s.kind();
    cert.subject = describe_subject(s);
    cert.epsilon0 = shift_epsilon0();
    Integer prev_t(0), prev_tau(0);
    for (unsigned n = 1; n <= n_max; ++n) {
        auto t = find_return_time(s, n, mode, limits, prev_t + 1);
        if (!t) {
            std::ostringstream os;
            os << "no return time at depth " << n << " in (" << to_decimal(prev_t) << ", "
               << to_decimal(limits.horizon) << "]";
            throw SearchExhausted(os.str());
        }
        if (mode == ReturnMode::canonical && s.offset() == 0 && *t < canonical_return_lower_bound(s.kind(), n))
            throw std::logic_error("canonical return time fell below its structural lower bound");

        Integer min_tau = Integer(static_cast<long>(n) + 1);
        if (min_tau <= prev_tau) min_tau = prev_tau + 1;
        auto tau = find_separation_time(s, *t, min_tau, limits);
        if (!tau) {
            std::ostringstream os;
            os << "no separation time at depth " << n << " for t=" << to_decimal(*t)
               << " within horizon " << to_decimal(limits.horizon) << " (stream may be eventually periodic)";
            throw SearchExhausted(os.str());
        }
        bool sep_ok = metric_at_least(shift(s, *t + *tau), shift(s, *tau), cert.epsilon0, limits.radius_cap) ==
                      Ternary::yes;
        cert.entries.push_back(
            CertificateEntry{n, *t, *tau, proximity_bound_for(s.kind(), n), sep_ok});
        prev_t = *t;
        prev_tau = *tau;
    }
    return cert;
}

UnpredictabilityCertificate transport_certificate(const SymbolStream& s, const UnpredictabilityCertificate& cert,
                                                  const Integer& k, const SearchLimits& limits) {
    if (k < 0) throw std::domain_error("transport shift must be non-negative");
    if (s.kind() != cert.kind) throw std::domain_error("stream kind does not match the certificate");
    UnpredictabilityCertificate out;
    out.kind = cert.kind;
    out.epsilon0 = cert.epsilon0;
    SymbolStream q = shift(s, k);
    out.subject = describe_subject(q);
    for (const auto& e : cert.entries) {
        if (k >= static_cast<long>(e.depth)) continue;     // window does not survive the shift
        Integer zeta = e.separation_time - k;
        if (zeta < 1) continue;                            // separation epoch already consumed
        unsigned depth = e.depth - static_cast<unsigned>(k.get_ui());
        if (!window_agrees(q, e.return_time, depth)) unverified("transported entry", e.return_time, depth);
        bool sep_ok =
            metric_at_least(shift(q, e.return_time + zeta), shift(q, zeta), out.epsilon0, limits.radius_cap) ==
            Ternary::yes;
        out.entries.push_back(
            CertificateEntry{depth, e.return_time, zeta, proximity_bound_for(out.kind, depth), sep_ok});
    }
    return out;
}

std::vector<PoissonEntry> certify_poisson_positive(const SymbolStream& s, unsigned n_max, ReturnMode mode,
                                                   const SearchLimits& limits) {
    std::vector<PoissonEntry> out;
    Integer prev_t(0);
    for (unsigned n = 1; n <= n_max; ++n) {
        auto t = find_return_time(s, n, mode, limits, prev_t + 1);
        if (!t) {
            std::ostringstream os;
            os << "no forward return at depth " << n << " within horizon " << to_decimal(limits.horizon);
            throw SearchExhausted(os.str());
        }
        out.push_back(PoissonEntry{n, *t, proximity_bound_for(s.kind(), n)});
        prev_t = *t;
    }
    return out;
}

std::vector<PoissonEntry> certify_poisson_negative(const SymbolStream& s, unsigned n_max, ReturnMode mode,
                                                   const SearchLimits& limits) {
    if (s.kind() != StreamKind::bi_infinite)
        throw std::domain_error("negative returns need a bi-infinite stream");
    std::vector<PoissonEntry> out;
    Integer prev_t(0);
    for (unsigned n = 1; n <= n_max; ++n) {
        Integer hi = prev_t - 1;
        std::optional<Integer> t;
        if (mode == ReturnMode::canonical) {
            t = canonical_return_negative(s, n, hi);
        } else {
            t = first_window_return_backward(s, n, ScanRange{hi, -limits.horizon});
            if (t && !window_agrees(s, *t, n)) unverified("backward return scan", *t, n);
        }
        if (!t) {
            std::ostringstream os;
            os << "no backward return at depth " << n << " within horizon " << to_decimal(limits.horizon);
            throw SearchExhausted(os.str());
        }
        out.push_back(PoissonEntry{n, *t, proximity_bound_for(s.kind(), n)});
        prev_t = *t;
    }
    return out;
}

DensityReport density_check(const SymbolStream& s, unsigned window) {
    if (!is_star_backed(s)) throw std::domain_error("density check needs a listing-backed stream");
    if (window == 0) throw std::domain_error("window must be at least 1");
    DensityReport rep;
    rep.kind = s.kind();
    rep.window = window;
    const Integer& a = s.offset();
    const bool bi = s.kind() == StreamKind::bi_infinite;
    const std::size_t length = bi ? 2 * static_cast<std::size_t>(window) + 1 : window;
    const long r = bi ? static_cast<long>(window) : 0;
    Integer count = pow2(static_cast<unsigned long>(length));
    for (Integer v(0); v < count; ++v) {
        FiniteWord w = FiniteWord::from_value(v, length);
        DensityHit hit;
        hit.word = w;
        bool ok = true;
        if (!bi) {
            // Occurrence at the start of the block w 0^pad; pad until the
            // shift is applicable to this (possibly shifted) stream.
            FiniteWord block = w;
            Integer t = one_sided_block_start(block) - a;
            for (int pad = 0; t < 0; ++pad) {
                if (pad > 128) throw std::logic_error("density padding failed to clear the stream offset");
                block.push_back(0);
                t = one_sided_block_start(block) - a;
            }
            hit.shift_right = t;
            for (std::size_t i = 0; i < length && ok; ++i)
                ok = s.symbol(t + static_cast<long>(i)) == w.symbol(i);
        } else {
            // Right side: w 0^pad 0 has odd rank; pattern centre at start + r.
            FiniteWord block = w;
            block.push_back(0);
            Integer t = bi_right_block_start(block) + r - a;
            for (int pad = 0; t < 1; ++pad) {
                if (pad > 128) throw std::logic_error("density padding failed to clear the stream offset");
                block.push_back(0);
                t = bi_right_block_start(block) + r - a;
            }
            hit.shift_right = t;
            // Left side: w 0^pad 1 has even rank.
            FiniteWord lblock = w;
            lblock.push_back(1);
            Integer u = bi_left_block_start(lblock) + r - a;
            for (int pad = 0; u > -1; ++pad) {
                if (pad > 128) throw std::logic_error("density padding failed to clear the stream offset");
                FiniteWord widened = w;
                for (int j = 0; j <= pad; ++j) widened.push_back(0);
                widened.push_back(1);
                lblock = widened;
                u = bi_left_block_start(lblock) + r - a;
            }
            hit.shift_left = u;
            for (long i = -r; i <= r && ok; ++i) {
                std::size_t pos = static_cast<std::size_t>(i + r);
                ok = s.symbol(t + i) == w.symbol(pos) && s.symbol(u + i) == w.symbol(pos);
            }
        }
        hit.verified = ok;
        rep.hits.push_back(std::move(hit));
    }
    rep.all_found = true;
    for (const auto& h : rep.hits)
        if (!h.verified) rep.all_found = false;
    return rep;
}

AperiodicityReport aperiodicity_check(const SymbolStream& s, unsigned long max_period, const Integer& index_hi) {
    if (max_period == 0) throw std::domain_error("max period must be at least 1");
    AperiodicityReport rep;
    rep.max_period = max_period;
    std::vector<unsigned long> periods;
    for (unsigned long q = 1; q <= max_period; ++q) periods.push_back(q);
    rep.witnesses = aperiodicity_witnesses(s, periods, ScanRange{Integer(0), index_hi});
    rep.all_found = true;
    for (const auto& w : rep.witnesses)
        if (!w) rep.all_found = false;
    return rep;
}

ShiftSystem::ShiftSystem(SymbolStream designated) : designated_(std::move(designated)) {}

SymbolStream ShiftSystem::inverse_step(const SymbolStream& x) const {
    if (!is_flow()) throw std::domain_error("one-sided shift has no inverse step");
    return shift(x, Integer(-1));
}

std::optional<SensitivityWitness> sensitivity_witness_on_orbit(const ShiftSystem& sys, const Integer& orbit_offset,
                                                               const Dyadic& delta, const SearchLimits& limits) {
    SymbolStream r = sys.orbit_point(orbit_offset);
    unsigned m = least_depth_with_bound_below(sys.kind(), delta);
    ReturnMode mode = is_star_backed(r) ? ReturnMode::canonical : ReturnMode::minimal;
    auto t = find_return_time(r, m, mode, limits);
    if (!t) return std::nullopt;
    auto tau = find_separation_time(r, *t, Integer(1), limits);
    if (!tau) return std::nullopt;
    Dyadic eps = shift_epsilon0();
    if (metric_at_least(shift(r, *t + *tau), shift(r, *tau), eps, limits.radius_cap) != Ternary::yes)
        return std::nullopt;
    return SensitivityWitness{orbit_offset, *t, delta, proximity_bound_for(sys.kind(), m), *tau, eps};
}

SensitivityOutcome sensitivity_witness(const ShiftSystem& sys, const SymbolStream& r, const Dyadic& delta,
                                       const Integer& orbit_scan_horizon, const SearchLimits& limits) {
    if (delta.sign() <= 0) throw std::domain_error("delta must be positive");
    if (r.kind() != sys.kind()) throw std::domain_error("state kind does not match the system");
    SensitivityOutcome outcome{std::nullopt, Dyadic(0)};

    if (r.rule_ptr() == sys.designated().rule_ptr()) {
        Integer off = r.offset() - sys.designated().offset();
        outcome.witness = sensitivity_witness_on_orbit(sys, off, delta, limits);
        if (outcome.witness) outcome.deepest_separation = outcome.witness->separation_lower_bound;
        return outcome;
    }

    // Off-orbit state: approach it through orbit points within delta/2, then
    // ride a deep return of the approach point. The separation only carries
    // half of epsilon0 across the triangle.
    Dyadic half_delta = delta.times_pow2(-1);
    Dyadic eps_half = shift_epsilon0().times_pow2(-1);
    unsigned m2 = least_depth_with_bound_below(sys.kind(), half_delta);
    for (Integer mu(0); mu <= orbit_scan_horizon; ++mu) {
        SymbolStream p = sys.orbit_point(mu);
        AgreementResult agree = agreement_radius(p, r, limits.radius_cap);
        if (!agree.at_least(m2)) continue;

        // If p and r part ways at some positive index, shifting there puts
        // the pair a full epsilon0 apart and p itself is the witness.
        if (agree.kind == AgreementResult::Kind::radius) {
            auto j = first_difference(p, r, ScanRange{Integer(1), limits.horizon});
            if (j && metric_at_least(shift(p, *j), shift(r, *j), shift_epsilon0(), limits.radius_cap) ==
                         Ternary::yes) {
                outcome.witness = SensitivityWitness{mu,       Integer(0), delta, proximity_bound_for(sys.kind(), m2),
                                                     *j,       shift_epsilon0()};
                outcome.deepest_separation = shift_epsilon0();
                return outcome;
            }
        }

        // Otherwise take a return u = sigma^t(p) at the full certified
        // agreement depth and separate u from p; against r this still
        // certifies epsilon0/2 whenever the direct decision succeeds.
        unsigned long depth = agree.kind == AgreementResult::Kind::exceeds_cap ? limits.radius_cap : agree.radius;
        if (depth > m2 + 64) depth = m2 + 64;   // deep enough; keeps the window cheap
        ReturnMode mode = is_star_backed(p) ? ReturnMode::canonical : ReturnMode::minimal;
        auto t = find_return_time(p, static_cast<unsigned>(depth), mode, limits);
        if (!t) continue;
        auto tau = find_separation_time(p, *t, Integer(1), limits);
        if (!tau) continue;
        Ternary sep = metric_at_least(shift(p, *t + *tau), shift(r, *tau), eps_half, limits.radius_cap);
        if (sep == Ternary::yes) {
            Dyadic near_bound = proximity_bound_for(sys.kind(), m2) +
                                proximity_bound_for(sys.kind(), static_cast<unsigned>(depth));
            outcome.witness = SensitivityWitness{mu, *t, delta, near_bound, *tau, eps_half};
            if (eps_half > outcome.deepest_separation) outcome.deepest_separation = eps_half;
            return outcome;
        }
    }
    return outcome;
}

}  // namespace updyn

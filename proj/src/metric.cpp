#include "updyn/metric.hpp"

#include <stdexcept>

namespace updyn {

const char* to_string(Ternary t) {
    switch (t) {
        case Ternary::yes: return "yes";
        case Ternary::no: return "no";
        default: return "unknown";
    }
}

DyadicEnclosure::DyadicEnclosure(StreamKind kind, Dyadic partial_sum, Dyadic tail_bound, IndexWindow window)
    : kind_(kind), partial_sum_(std::move(partial_sum)), tail_bound_(std::move(tail_bound)), window_(std::move(window)) {
    if (partial_sum_.sign() < 0 || tail_bound_.sign() < 0) {
        throw std::logic_error("enclosure bounds must be non-negative");
    }
    Dyadic mass = partial_sum_ + tail_bound_;
    Dyadic cap(kind_ == StreamKind::one_sided ? 2 : 3);
    if (mass > cap) {
        throw std::logic_error("enclosure exceeds the total series mass");
    }
}

bool DyadicEnclosure::contained_in(const DyadicEnclosure& outer) const {
    return partial_sum_ >= outer.partial_sum_ && upper() <= outer.upper();
}

namespace {

void require_same_kind(const SymbolStream& s, const SymbolStream& r) {
    if (s.kind() != r.kind()) {
        throw std::domain_error("metric requires streams of the same kind");
    }
}

int diff_at(const SymbolStream& s, const SymbolStream& r, const Integer& i) {
    return s.symbol(i) == r.symbol(i) ? 0 : 1;
}

Dyadic tail_at(StreamKind kind, unsigned long radius) {
    if (kind == StreamKind::one_sided) return Dyadic::one_over_pow2(radius);
    return radius == 0 ? Dyadic(2) : Dyadic::one_over_pow2(radius - 1);
}

}  // namespace

DyadicEnclosure metric(const SymbolStream& s, const SymbolStream& r, unsigned long window_radius) {
    require_same_kind(s, r);
    const bool bi = s.kind() == StreamKind::bi_infinite;
    // Accumulate sum_k diff_k * 2^(R - |k|) as one integer; the partial sum is
    // then acc / 2^R exactly.
    Integer acc = 0;
    for (unsigned long k = 0; k <= window_radius; ++k) {
        Integer w = pow2(window_radius - k);
        Integer idx(static_cast<long>(k));
        if (diff_at(s, r, idx)) acc += w;
        if (bi && k > 0 && diff_at(s, r, -idx)) acc += w;
    }
    IndexWindow window{bi ? Integer(-static_cast<long>(window_radius)) : Integer(0),
                       Integer(static_cast<long>(window_radius))};
    return DyadicEnclosure(s.kind(), Dyadic(acc, window_radius), tail_at(s.kind(), window_radius), window);
}

Ternary metric_at_least(const SymbolStream& s, const SymbolStream& r, const Dyadic& threshold,
                        unsigned long radius_cap) {
    require_same_kind(s, r);
    if (threshold.sign() <= 0) throw std::domain_error("metric_at_least requires a positive threshold");
    const bool bi = s.kind() == StreamKind::bi_infinite;
    Integer acc = 0;
    for (unsigned long radius = 0; radius <= radius_cap; ++radius) {
        Integer idx(static_cast<long>(radius));
        acc <<= 1;
        if (radius == 0) {
            acc = diff_at(s, r, idx);
        } else {
            if (diff_at(s, r, idx)) acc += 1;
            if (bi && diff_at(s, r, -idx)) acc += 1;
        }
        Dyadic partial(acc, radius);
        if (partial >= threshold) return Ternary::yes;
        if (partial + tail_at(s.kind(), radius) < threshold) return Ternary::no;
    }
    return Ternary::unknown;
}

AgreementResult agreement_radius(const SymbolStream& s, const SymbolStream& r, unsigned long cap) {
    require_same_kind(s, r);
    const bool bi = s.kind() == StreamKind::bi_infinite;
    for (unsigned long i = 0; i <= cap; ++i) {
        Integer idx(static_cast<long>(i));
        bool mismatch = diff_at(s, r, idx) != 0;
        if (!mismatch && bi && i > 0) mismatch = diff_at(s, r, -idx) != 0;
        if (mismatch) {
            if (i == 0) return {AgreementResult::Kind::mismatch_at_origin, 0};
            return {AgreementResult::Kind::radius, i - 1};
        }
    }
    return {AgreementResult::Kind::exceeds_cap, cap};
}

}  // namespace updyn

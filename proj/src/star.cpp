#include "updyn/star.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>

namespace updyn {

namespace {

// Indices below this bound stay in pure int64 arithmetic inside the rules.
constexpr std::int64_t kFastIndexBound = std::int64_t(1) << 54;

int one_sided_at_fast(std::int64_t i) {
    // Locate the length-m segment: start(m) <= i < start(m) + m*2^m.
    int m = 1;
    std::int64_t start = 0;
    for (;;) {
        std::int64_t seglen = static_cast<std::int64_t>(m) << m;
        if (i < start + seglen) break;
        start += seglen;
        ++m;
    }
    std::int64_t o = i - start;
    std::int64_t block = o / m;   // rank block+1, word value = block
    std::int64_t p = o % m;
    return static_cast<int>((block >> (m - 1 - p)) & 1);
}

int bi_at_fast(std::int64_t i) {
    if (i >= 0) {
        // Right side: odd-rank blocks, segment of length-m blocks spans
        // m*2^(m-1) symbols.
        int m = 1;
        std::int64_t start = 0;
        for (;;) {
            std::int64_t seglen = static_cast<std::int64_t>(m) << (m - 1);
            if (i < start + seglen) break;
            start += seglen;
            ++m;
        }
        std::int64_t o = i - start;
        std::int64_t u = o / m;
        std::int64_t p = o % m;
        std::int64_t value = 2 * u;   // rank 2u+1
        return static_cast<int>((value >> (m - 1 - p)) & 1);
    }
    // Left side: even-rank blocks outward from the origin, starting with the
    // length-2 segment. o counts leftward from the segment's right edge.
    std::int64_t n = -i;
    int m = 2;
    std::int64_t cum = 0;   // total length of left segments shorter than m
    for (;;) {
        std::int64_t seglen = static_cast<std::int64_t>(m) << (m - 1);
        if (n <= cum + seglen) break;
        cum += seglen;
        ++m;
    }
    std::int64_t o = n - cum - 1;
    std::int64_t u = o / m;
    std::int64_t from_right = o % m;
    std::int64_t value = 2 * u + 1;   // rank 2u+2
    return static_cast<int>((value >> from_right) & 1);
}

int one_sided_at_big(const Integer& i) {
    unsigned m = 1;
    Integer start = 0;
    for (;;) {
        Integer seglen = Integer(m) * pow2(m);
        if (i < start + seglen) break;
        start += seglen;
        ++m;
    }
    Integer o = i - start;
    Integer block = o / m;
    Integer p = o % m;
    return bit_of(block, m - 1 - p.get_ui());
}

int bi_at_big(const Integer& i) {
    if (i >= 0) {
        unsigned m = 1;
        Integer start = 0;
        for (;;) {
            Integer seglen = Integer(m) * pow2(m - 1);
            if (i < start + seglen) break;
            start += seglen;
            ++m;
        }
        Integer o = i - start;
        Integer u = o / m;
        Integer p = o % m;
        Integer value = 2 * u;
        return bit_of(value, m - 1 - p.get_ui());
    }
    Integer n = -i;
    unsigned m = 2;
    Integer cum = 0;
    for (;;) {
        Integer seglen = Integer(m) * pow2(m - 1);
        if (n <= cum + seglen) break;
        cum += seglen;
        ++m;
    }
    Integer o = n - cum - 1;
    Integer u = o / m;
    Integer from_right = o % m;
    Integer value = 2 * u + 1;
    return bit_of(value, from_right.get_ui());
}

class OneSidedStarRule final : public SymbolRule {
public:
    int at(const Integer& i) const override { return star_symbol_one_sided(i); }
    int at_i64(std::int64_t i) const override {
        if (i >= 0 && i < kFastIndexBound) return one_sided_at_fast(i);
        return at(Integer(static_cast<long>(i)));
    }
};

class BiInfiniteStarRule final : public SymbolRule {
public:
    int at(const Integer& i) const override { return star_symbol_bi(i); }
    int at_i64(std::int64_t i) const override {
        if (i > -kFastIndexBound && i < kFastIndexBound) return bi_at_fast(i);
        return at(Integer(static_cast<long>(i)));
    }
};

}  // namespace

FiniteWord word_of(const OrderedWordIndex& idx) {
    if (idx.length == 0) throw std::domain_error("word_of: length must be positive");
    if (idx.rank < 1 || idx.rank > pow2(idx.length)) {
        throw std::domain_error("word_of: rank out of range [1, 2^m]");
    }
    return FiniteWord::from_value(idx.rank - 1, idx.length);
}

OrderedWordIndex rank_of(const FiniteWord& w) {
    if (w.empty()) throw std::domain_error("rank_of: empty word");
    return {static_cast<unsigned>(w.length()), w.value() + 1};
}

Integer one_sided_segment_start(unsigned m) {
    if (m == 0) throw std::domain_error("segment lengths start at 1");
    return Integer(static_cast<long>(m) - 2) * pow2(m) + 2;
}

Integer bi_segment_start_right(unsigned m) {
    if (m == 0) throw std::domain_error("segment lengths start at 1");
    return Integer(static_cast<long>(m) - 2) * pow2(m - 1) + 1;
}

Integer bi_segment_start_left(unsigned m) {
    if (m < 2) throw std::domain_error("the left listing has no length-1 segment");
    return -(Integer(static_cast<long>(m) - 1) * pow2(m));
}

int star_symbol_one_sided(const Integer& i) {
    if (i < 0) throw std::domain_error("one-sided sequence has no negative indices");
    return one_sided_at_big(i);
}

int star_symbol_bi(const Integer& i) { return bi_at_big(i); }

Integer one_sided_block_start(const FiniteWord& w) {
    if (w.empty()) throw std::domain_error("block start of an empty word");
    unsigned m = static_cast<unsigned>(w.length());
    return one_sided_segment_start(m) + Integer(m) * w.value();
}

Integer bi_right_block_start(const FiniteWord& w) {
    if (w.empty()) throw std::domain_error("block start of an empty word");
    if (w.symbol(w.length() - 1) != 0) {
        throw std::domain_error("right-side blocks have odd rank (last symbol 0)");
    }
    unsigned m = static_cast<unsigned>(w.length());
    Integer u = w.value() / 2;   // rank 2u+1
    return bi_segment_start_right(m) + Integer(m) * u;
}

Integer bi_left_block_start(const FiniteWord& w) {
    if (w.length() < 2) throw std::domain_error("left-side blocks have length >= 2");
    if (w.symbol(w.length() - 1) != 1) {
        throw std::domain_error("left-side blocks have even rank (last symbol 1)");
    }
    unsigned m = static_cast<unsigned>(w.length());
    Integer u = (w.value() - 1) / 2;   // rank 2u+2
    // Right edge of the length-m segment sits just left of the shorter ones.
    Integer right_edge = bi_segment_start_left(m) + Integer(m) * pow2(m - 1) - 1;
    return right_edge - (u + 1) * m + 1;
}

SymbolStream one_sided_star() {
    static const auto rule = std::make_shared<const OneSidedStarRule>();
    return SymbolStream(StreamKind::one_sided, rule, "s*: all binary blocks listed by length then value");
}

SymbolStream bi_infinite_star() {
    static const auto rule = std::make_shared<const BiInfiniteStarRule>();
    return SymbolStream(StreamKind::bi_infinite, rule,
                        "s*: odd-rank blocks rightward, even-rank blocks leftward");
}

bool is_star_backed(const SymbolStream& s) {
    const SymbolRule* r = &s.rule();
    return dynamic_cast<const OneSidedStarRule*>(r) != nullptr ||
           dynamic_cast<const BiInfiniteStarRule*>(r) != nullptr;
}

}  // namespace updyn

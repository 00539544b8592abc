#pragma once

#include "updyn/stream.hpp"
#include "updyn/word.hpp"

namespace updyn {

// Position of a finite block in the length-then-first-difference ordering
// (shorter words first; at equal length, 0 before 1 at the first differing
// symbol). With that rule the rank-j word of length m is just the binary
// numeral of j-1, so ranks live in [1, 2^m].
struct OrderedWordIndex {
    unsigned length;
    Integer rank;
};

FiniteWord word_of(const OrderedWordIndex& idx);
OrderedWordIndex rank_of(const FiniteWord& w);

// Index of the first symbol of the length-m block segment in the one-sided
// listing: sum_{j=1}^{m-1} j*2^j = (m-2)*2^m + 2.
Integer one_sided_segment_start(unsigned m);

// First index of the length-m odd-rank segment on the right side:
// sum_{k=1}^{m-1} k*2^(k-1) = (m-2)*2^(m-1) + 1.
Integer bi_segment_start_right(unsigned m);

// Leftmost (negative) index of the length-m even-rank segment on the left
// side: -(m-1)*2^m. The left listing starts with the length-2 blocks, so
// m = 1 is a domain error.
Integer bi_segment_start_left(unsigned m);

// Symbol i of the one-sided listing of all blocks (length 1, then 2, ...).
// Negative indices are a domain error.
int star_symbol_one_sided(const Integer& i);

// Symbol i of the two-sided listing: odd-rank blocks rightward from the
// origin, even-rank blocks leftward, each block keeping its internal
// left-to-right order.
int star_symbol_bi(const Integer& i);

// Start index of block w inside its own-length segment of the one-sided
// listing: segment_start(|w|) + |w| * value(w).
Integer one_sided_block_start(const FiniteWord& w);

// Start index of odd-rank block w on the right side. Requires an odd rank,
// i.e. the last symbol of w is 0.
Integer bi_right_block_start(const FiniteWord& w);

// Leftmost index of even-rank block w on the left side. Requires an even
// rank (last symbol 1) and |w| >= 2.
Integer bi_left_block_start(const FiniteWord& w);

// The two listed sequences as streams. Rules carry int64 fast paths for the
// scan kernels and are exact at any index magnitude through the big-integer
// path.
SymbolStream one_sided_star();
SymbolStream bi_infinite_star();

// True when the stream's rule is the one-sided (resp. bi-infinite) listing
// rule, regardless of shift offset. Canonical return-time arithmetic only
// applies to these.
bool is_star_backed(const SymbolStream& s);

}  // namespace updyn

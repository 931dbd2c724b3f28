#pragma once

#include <string>
#include <vector>

#include "knotmarket/crossings.hpp"

namespace knotmarket {

// Word in the braid group on `strands` strands. Letter k with 1 <= |k| <
// strands crosses the strands at positions |k| and |k|+1 (1-based); k > 0
// means the left strand passes over, k < 0 under. Letters are listed in
// time order, leftmost earliest. The empty word is the identity braid.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Throws std::invalid_argument unless every letter k has 1 <= |k| < strands.
void validate(const BraidWord& word);

// Letters are events in time order, each contributing sign * position.
BraidWord word_from_crossings(const std::vector<CrossingEvent>& events, int strands);

BraidWord concatenate(const BraidWord& a, const BraidWord& b);

// Reversed word with every sign flipped; concatenating w with inverse(w)
// free-reduces to the identity.
BraidWord inverse(const BraidWord& word);

// Cancels adjacent inverse pairs until none remain. The result does not
// depend on cancellation order.
BraidWord free_reduce(const BraidWord& word);

// free_reduce, then cancellation of inverse (first, last) pairs — legal
// because the word is read cyclically once the braid is closed.
BraidWord cyclic_reduce(const BraidWord& word);

// Sum of letter signs.
int writhe(const BraidWord& word);

// perm[s] = final position of the strand entering at position s, 0-based.
std::vector<int> underlying_permutation(const BraidWord& word);

int cycle_count(const std::vector<int>& permutation);

// Market reading of one strand. A crossing is "won" by the strand whose
// own price moved more — the one on top (left strand of a positive letter,
// right strand of a negative one); the other strand suffers it. The trend
// tag follows net rank displacement: a ticker that ends further right
// (pricier rank) than it started reads bullish, further left bearish.
struct StrandReading {
    std::string ticker;
    int overcrossings = 0;
    int undercrossings = 0;
    int start_position = 0;  // 1-based
    int end_position = 0;
    std::string trend;  // "bullish" | "bearish" | "flat"
};

// tickers[i] labels the strand starting at position i+1; readings come
// back in that order. Throws on size mismatch.
std::vector<StrandReading> interpret_word(const BraidWord& word,
                                          const std::vector<std::string>& tickers);

// "s2 s3 s3' s1'" — one token per letter, prime marks an inverse;
// identity renders as "e".
std::string render_ascii(const BraidWord& word);

// "σ2·σ3²·σ3⁻¹·σ1⁻¹" — adjacent equal letters grouped into powers;
// identity renders as "e".
std::string render_pretty(const BraidWord& word);

// Inverse of render_ascii ("e" or s-tokens); throws on malformed tokens
// or out-of-range generators.
BraidWord parse_ascii(const std::string& text, int strands);

}  // namespace knotmarket

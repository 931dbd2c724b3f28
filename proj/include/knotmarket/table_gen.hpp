#pragma once

#include <string>
#include <vector>

#include "knotmarket/braid.hpp"
#include "knotmarket/classify.hpp"
#include "knotmarket/laurent.hpp"

namespace knotmarket {

// Authoring data for one table row: published classical invariants plus
// candidate braid words whose closure should realize the entry. The braid
// words are the untrusted part — each candidate is verified against the
// classical data before it is allowed to contribute computed invariants.
struct ClassicalRow {
    std::string name;
    int components = 1;
    int crossing_number = 0;
    bool alternating = false;
    LaurentPoly alexander;  // canonical form
    std::vector<BraidWord> candidates;
    std::string note;
};

const std::vector<ClassicalRow>& classical_rows();

struct GenerationResult {
    std::string text;                  // serialized table, ready to write
    std::vector<std::string> dropped;  // rows excluded because no candidate
                                       // word survived verification
};

// Build the table: for each classical row, find the first candidate word
// whose closure reproduces the row (component count, canonical Alexander
// polynomial, and — for alternating entries — a Jones spread of exactly one
// power of t per crossing), then emit the row with that word's Jones value.
// Rows with no surviving candidate are dropped and reported.
GenerationResult generate_knot_table();

}  // namespace knotmarket

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "knotmarket/laurent.hpp"

namespace knotmarket {

// One reference row: a knot or link name with the invariants that identify
// it. alexander is stored in alexander_normalize canonical form (the zero
// polynomial for split links); jones, when present, is the value for one
// fixed handedness of the entry.
struct KnotTableEntry {
    std::string name;
    int components = 1;
    int crossing_number = 0;
    LaurentPoly alexander;
    bool has_jones = false;
    LaurentPoly jones;
    std::string note;
};

// Table file, one entry per line:
//   name|components|crossings|alexander|jones|note
// Polynomials are written "q<offset>:<c0>,<c1>,..." — integer coefficients
// from the lowest quarter-exponent upward in steps of 4 (one full power of
// t) — or "0" for the zero polynomial. The jones and note fields may be
// empty; '#' lines and blank lines are skipped. Malformed lines throw
// std::invalid_argument.
std::vector<KnotTableEntry> load_table(std::istream& in);
std::string serialize_table(const std::vector<KnotTableEntry>& table,
                            const std::vector<std::string>& header_comments = {});

// The table bundled into the library (also shipped as data/knot_table.txt).
const std::vector<KnotTableEntry>& builtin_table();
const char* knot_table_text();

// One classification hit. mirrored marks a match found under t -> 1/t,
// i.e. the query looks like the mirror image of the named entry.
struct Candidate {
    std::string name;
    bool mirrored = false;
    std::string note;
};

// All entries with the given component count whose canonical Alexander
// polynomial matches the query (normalized internally, so any unit
// multiple of the query works). A non-null jones narrows further: entries
// carrying a Jones value must match it directly or mirrored. Empty result
// means unrecognized.
std::vector<Candidate> lookup(const std::vector<KnotTableEntry>& table,
                              const LaurentPoly& alexander_query,
                              const LaurentPoly* jones_query, int components);

}  // namespace knotmarket

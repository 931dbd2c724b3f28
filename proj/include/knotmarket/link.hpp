#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotmarket/braid.hpp"

namespace knotmarket {

// One crossing of a link diagram. arcs lists the four incident arc labels
// counterclockwise starting from the incoming under-arc; sign matches the
// braid letter that produced the crossing.
struct Crossing {
    int sign = 0;
    std::array<int, 4> arcs{};
};

// Planar diagram of a closed braid. Arcs are labeled 1..arc_count; every
// arc incident to a crossing appears in exactly two crossing slots.
// free_loops counts components that touch no crossing (strands that never
// crossed anything close into bare circles).
struct LinkDiagram {
    std::vector<Crossing> crossings;
    int arc_count = 0;
    int component_count = 0;
    int free_loops = 0;
    BraidWord source_word;
};

// Trace closure: strands run downward, the bottom end at each position
// joins the top start at the same position. Crossing count equals word
// length; component count equals the cycle count of the word's underlying
// permutation.
LinkDiagram close_braid(const BraidWord& word);

// Recounts components from the crossing tuples alone (each crossing joins
// arc slots 0-2 and 1-3), plus the recorded free loops. Agrees with the
// stored component_count; kept separate so tests can cross-check the two
// derivations.
int trace_components(const LinkDiagram& diagram);

// "X[1,2,3,4] X[4,3,2,1]" — space-separated crossings; empty string for a
// crossingless diagram.
std::string pd_code(const LinkDiagram& diagram);

}  // namespace knotmarket

#pragma once

#include <string>
#include <vector>

#include "knotmarket/market.hpp"

namespace knotmarket {

// Crossing orientation: the left (lower-ranked) strand either passes over
// the right one or under it.
enum class CrossSign { over, under };

// One adjacent transposition between two consecutive dates. position is
// 1-based: the strands at positions (position, position+1) swap, counted
// in the arrangement current at that moment (earlier swaps in the same
// date boundary already applied). left/right name those strands in their
// pre-swap order, and the deltas are each ticker's own absolute price
// change across the boundary.
struct CrossingEvent {
    Date date_from;
    Date date_to;
    int position = 0;
    std::string left;
    std::string right;
    Decimal delta_left;
    Decimal delta_right;
    CrossSign sign = CrossSign::under;
    bool tie = false;
};

struct CrossingScan {
    std::vector<CrossingEvent> events;
    std::vector<std::string> warnings;
};

// Decides over/under for a single swap: the ticker that moved more in
// absolute terms wins and goes over. Equal moves fall back to under with
// tie set, so callers can warn.
CrossingEvent classify_crossing(const PriceTable& table, std::size_t row_from,
                                int position, int left_col, int right_col);

// Decomposes every consecutive-date rank change into adjacent swaps by
// bubbling the old arrangement into the new one, classifying each swap.
// Each boundary uses the minimum possible number of swaps (the inversion
// count between the two permutations).
CrossingScan detect_crossings(const PriceTable& table);

}  // namespace knotmarket

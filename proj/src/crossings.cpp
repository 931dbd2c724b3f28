#include "knotmarket/crossings.hpp"

#include <sstream>

namespace knotmarket {

CrossingEvent classify_crossing(const PriceTable& table, std::size_t row_from,
                                int position, int left_col, int right_col) {
    CrossingEvent event;
    event.date_from = table.dates.at(row_from);
    event.date_to = table.dates.at(row_from + 1);
    event.position = position;
    event.left = table.tickers.at(left_col);
    event.right = table.tickers.at(right_col);
    const auto& before = table.rows[row_from];
    const auto& after = table.rows[row_from + 1];
    event.delta_left = after[left_col].abs_diff(before[left_col]);
    event.delta_right = after[right_col].abs_diff(before[right_col]);
    if (event.delta_left > event.delta_right) {
        event.sign = CrossSign::over;
    } else {
        event.sign = CrossSign::under;
        event.tie = event.delta_left == event.delta_right;
    }
    return event;
}

CrossingScan detect_crossings(const PriceTable& table) {
    CrossingScan scan;
    auto ranks = rank_sequence(table);
    for (std::size_t r = 0; r + 1 < ranks.size(); ++r) {
        std::vector<int> arrangement = ranks[r];
        std::vector<int> target_pos(arrangement.size());
        for (std::size_t p = 0; p < ranks[r + 1].size(); ++p)
            target_pos[ranks[r + 1][p]] = static_cast<int>(p);
        bool swapped = true;
        while (swapped) {
            swapped = false;
            for (std::size_t i = 0; i + 1 < arrangement.size(); ++i) {
                if (target_pos[arrangement[i]] <= target_pos[arrangement[i + 1]]) continue;
                CrossingEvent event =
                    classify_crossing(table, r, static_cast<int>(i) + 1,
                                      arrangement[i], arrangement[i + 1]);
                if (event.tie) {
                    std::ostringstream warning;
                    warning << event.date_from.to_string() << " -> "
                            << event.date_to.to_string() << ": " << event.left
                            << " and " << event.right << " moved by the same amount ("
                            << event.delta_left.to_string()
                            << "); crossing recorded as under";
                    scan.warnings.push_back(warning.str());
                }
                scan.events.push_back(std::move(event));
                std::swap(arrangement[i], arrangement[i + 1]);
                swapped = true;
            }
        }
    }
    return scan;
}

}  // namespace knotmarket

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "knotmarket/date.hpp"
#include "knotmarket/decimal.hpp"

namespace knotmarket {

// Price history for a fixed set of tickers. Rows are dates in strictly
// ascending order; rows[i][j] is the price of tickers[j] on dates[i].
// Canonical form additionally sorts the columns so the first row's prices
// ascend left to right (ties broken by ticker name); all tables produced
// by parse_price_table and table_window are canonical.
struct PriceTable {
    std::vector<std::string> tickers;
    std::vector<Date> dates;
    std::vector<std::vector<Decimal>> rows;

    int column(const std::string& ticker) const;  // -1 when absent
    const Decimal& price(std::size_t row, const std::string& ticker) const;
};

// Reorders columns in place into canonical order.
void canonicalize_columns(PriceTable& table);

// Reads CSV with a header line "date,TICKER,TICKER,...". Row order in the
// input does not matter; output rows ascend by date. A non-empty filter
// keeps only the named tickers. Malformed rows, duplicate dates, duplicate
// or unknown tickers, and non-positive prices throw std::invalid_argument.
PriceTable parse_price_table(std::istream& in,
                             const std::vector<std::string>& ticker_filter = {});
PriceTable parse_price_table_file(const std::string& path,
                                  const std::vector<std::string>& ticker_filter = {});

// Rows with from <= date <= to, columns re-canonicalized against the first
// date inside the window. Empty result when no rows fall in range.
PriceTable table_window(const PriceTable& table, const Date& from, const Date& to);

std::string to_csv(const PriceTable& table);

// One permutation per date: perm[p] = column index holding rank p, where
// rank 0 is the cheapest price that day. Equal prices rank the
// lexicographically earlier ticker lower.
using RankPermutation = std::vector<int>;
std::vector<RankPermutation> rank_sequence(const PriceTable& table);

}  // namespace knotmarket

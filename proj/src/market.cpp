#include "knotmarket/market.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotmarket {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' '))
            field.pop_back();
        std::size_t start = field.find_first_not_of(' ');
        fields.push_back(start == std::string::npos ? std::string() : field.substr(start));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

void apply_column_order(PriceTable& table, const std::vector<int>& order) {
    std::vector<std::string> tickers;
    tickers.reserve(order.size());
    for (int j : order) tickers.push_back(table.tickers[j]);
    table.tickers = std::move(tickers);
    for (auto& row : table.rows) {
        std::vector<Decimal> permuted;
        permuted.reserve(order.size());
        for (int j : order) permuted.push_back(row[j]);
        row = std::move(permuted);
    }
}

}  // namespace

int PriceTable::column(const std::string& ticker) const {
    for (std::size_t j = 0; j < tickers.size(); ++j)
        if (tickers[j] == ticker) return static_cast<int>(j);
    return -1;
}

const Decimal& PriceTable::price(std::size_t row, const std::string& ticker) const {
    int j = column(ticker);
    if (j < 0) throw std::invalid_argument("unknown ticker: " + ticker);
    return rows.at(row)[j];
}

void canonicalize_columns(PriceTable& table) {
    if (table.rows.empty()) return;
    std::vector<int> order(table.tickers.size());
    std::iota(order.begin(), order.end(), 0);
    const auto& first = table.rows.front();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (first[a] != first[b]) return first[a] < first[b];
        return table.tickers[a] < table.tickers[b];
    });
    apply_column_order(table, order);
}

PriceTable parse_price_table(std::istream& in,
                             const std::vector<std::string>& ticker_filter) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty price table");
    auto header = split_csv(line);
    if (header.size() < 2)
        throw std::invalid_argument("header needs a date column and at least one ticker");

    std::vector<std::string> all_tickers(header.begin() + 1, header.end());
    std::set<std::string> seen_tickers;
    for (const auto& t : all_tickers) {
        if (t.empty()) throw std::invalid_argument("empty ticker name in header");
        if (!seen_tickers.insert(t).second)
            throw std::invalid_argument("duplicate ticker: " + t);
    }

    std::vector<bool> keep(all_tickers.size(), true);
    if (!ticker_filter.empty()) {
        keep.assign(all_tickers.size(), false);
        for (const auto& want : ticker_filter) {
            auto it = std::find(all_tickers.begin(), all_tickers.end(), want);
            if (it == all_tickers.end())
                throw std::invalid_argument("unknown ticker: " + want);
            std::size_t j = it - all_tickers.begin();
            if (keep[j]) throw std::invalid_argument("duplicate ticker: " + want);
            keep[j] = true;
        }
    }

    PriceTable table;
    for (std::size_t j = 0; j < all_tickers.size(); ++j)
        if (keep[j]) table.tickers.push_back(all_tickers[j]);

    std::set<Date> seen_dates;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv(line);
        if (fields.size() != header.size())
            throw std::invalid_argument("row has " + std::to_string(fields.size()) +
                                        " fields, expected " + std::to_string(header.size()));
        Date date = Date::parse(fields[0]);
        if (!seen_dates.insert(date).second)
            throw std::invalid_argument("duplicate date: " + date.to_string());
        std::vector<Decimal> row;
        row.reserve(table.tickers.size());
        for (std::size_t j = 1; j < fields.size(); ++j) {
            if (!keep[j - 1]) continue;
            Decimal price = Decimal::parse(fields[j]);
            if (!price.positive())
                throw std::invalid_argument("non-positive price " + price.to_string() +
                                            " on " + date.to_string());
            row.push_back(price);
        }
        table.dates.push_back(date);
        table.rows.push_back(std::move(row));
    }
    if (table.dates.empty())
        throw std::invalid_argument("price table has no rows");

    std::vector<std::size_t> order(table.dates.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return table.dates[a] < table.dates[b]; });
    PriceTable sorted;
    sorted.tickers = table.tickers;
    for (std::size_t i : order) {
        sorted.dates.push_back(table.dates[i]);
        sorted.rows.push_back(std::move(table.rows[i]));
    }
    canonicalize_columns(sorted);
    return sorted;
}

PriceTable parse_price_table_file(const std::string& path,
                                  const std::vector<std::string>& ticker_filter) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parse_price_table(in, ticker_filter);
}

PriceTable table_window(const PriceTable& table, const Date& from, const Date& to) {
    PriceTable out;
    out.tickers = table.tickers;
    for (std::size_t i = 0; i < table.dates.size(); ++i) {
        if (table.dates[i] < from || to < table.dates[i]) continue;
        out.dates.push_back(table.dates[i]);
        out.rows.push_back(table.rows[i]);
    }
    canonicalize_columns(out);
    return out;
}

std::string to_csv(const PriceTable& table) {
    std::ostringstream out;
    out << "date";
    for (const auto& t : table.tickers) out << ',' << t;
    out << '\n';
    for (std::size_t i = 0; i < table.dates.size(); ++i) {
        out << table.dates[i].to_string();
        for (const auto& price : table.rows[i]) out << ',' << price.to_string();
        out << '\n';
    }
    return out.str();
}

std::vector<RankPermutation> rank_sequence(const PriceTable& table) {
    std::vector<RankPermutation> ranks;
    ranks.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        RankPermutation perm(table.tickers.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            if (row[a] != row[b]) return row[a] < row[b];
            return table.tickers[a] < table.tickers[b];
        });
        ranks.push_back(std::move(perm));
    }
    return ranks;
}

}  // namespace knotmarket

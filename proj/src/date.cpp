#include "knotmarket/date.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace knotmarket {

namespace {

bool leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

int days_in_month(int y, int m) {
    static const int table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && leap(y)) return 29;
    return table[m - 1];
}

bool split(const std::string& text, char sep, int& a, int& b, int& c) {
    int parts[3] = {0, 0, 0};
    int digits[3] = {0, 0, 0};
    int field = 0;
    for (char ch : text) {
        if (ch == sep) {
            if (++field > 2) return false;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            parts[field] = parts[field] * 10 + (ch - '0');
            ++digits[field];
        } else {
            return false;
        }
    }
    if (field != 2 || !digits[0] || !digits[1] || !digits[2]) return false;
    a = parts[0];
    b = parts[1];
    c = parts[2];
    return true;
}

}  // namespace

Date Date::parse(const std::string& text) {
    Date d;
    int a, b, c;
    if (split(text, '-', a, b, c)) {
        d = {a, b, c};
    } else if (split(text, '/', a, b, c)) {
        d = {c, a, b};
    } else {
        throw std::invalid_argument("bad date: '" + text + "'");
    }
    if (d.year < 1 || d.month < 1 || d.month > 12 || d.day < 1 ||
        d.day > days_in_month(d.year, d.month))
        throw std::invalid_argument("bad date: '" + text + "'");
    return d;
}

std::string Date::to_string() const {
    std::ostringstream out;
    out << year << '-';
    if (month < 10) out << '0';
    out << month << '-';
    if (day < 10) out << '0';
    out << day;
    return out.str();
}

}  // namespace knotmarket

#include "knotmarket/decimal.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace knotmarket {

Decimal Decimal::parse(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::int64_t whole = 0;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        whole = whole * 10 + (text[i] - '0');
        ++digits;
        ++i;
    }
    std::int64_t frac = 0;
    std::size_t frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            frac = frac * 10 + (text[i] - '0');
            ++frac_digits;
            ++i;
        }
    }
    if (i != text.size() || digits + frac_digits == 0 || frac_digits > 2)
        throw std::invalid_argument("bad decimal: '" + text + "'");
    if (frac_digits == 1) frac *= 10;
    std::int64_t h = whole * 100 + frac;
    return Decimal(negative ? -h : h);
}

std::string Decimal::to_string() const {
    std::int64_t h = hundredths_;
    std::ostringstream out;
    if (h < 0) {
        out << '-';
        h = -h;
    }
    out << h / 100 << '.' << static_cast<char>('0' + h / 10 % 10)
        << static_cast<char>('0' + h % 10);
    return out.str();
}

}  // namespace knotmarket

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace knotmarket {

// Fixed-point number with exactly two decimal places, stored as an integer
// count of hundredths. Price arithmetic stays exact: |77.39 - 77.40| is one
// cent, never a binary-float approximation.
class Decimal {
public:
    Decimal() = default;
    static Decimal from_hundredths(std::int64_t h) { return Decimal(h); }

    // Accepts an optional sign, digits, and at most two decimal places
    // ("78", "75.1", "72.78"). Anything else throws std::invalid_argument.
    static Decimal parse(const std::string& text);

    std::int64_t hundredths() const { return hundredths_; }
    bool positive() const { return hundredths_ > 0; }

    Decimal abs_diff(const Decimal& other) const {
        std::int64_t d = hundredths_ - other.hundredths_;
        return Decimal(d < 0 ? -d : d);
    }

    friend auto operator<=>(const Decimal&, const Decimal&) = default;

    // Always two decimal places: "75.10", "-0.01".
    std::string to_string() const;

private:
    explicit Decimal(std::int64_t h) : hundredths_(h) {}
    std::int64_t hundredths_ = 0;
};

}  // namespace knotmarket

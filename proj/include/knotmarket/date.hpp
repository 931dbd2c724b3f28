#pragma once

#include <compare>
#include <string>

namespace knotmarket {

// Calendar date, no time component.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    // Accepts ISO "2013-05-15" and US "5/15/2013". Rejects impossible
    // dates (month 13, Feb 30, ...) with std::invalid_argument.
    static Date parse(const std::string& text);

    friend auto operator<=>(const Date&, const Date&) = default;

    // ISO form, zero padded: "2013-05-15".
    std::string to_string() const;
};

}  // namespace knotmarket

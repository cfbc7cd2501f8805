#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace gmidas {

// Calendar month, comparable through a flat month index.
struct YearMonth {
    int year = 0;
    int month = 0;  // 1..12

    int index() const { return year * 12 + (month - 1); }
    auto operator<=>(const YearMonth& o) const { return index() <=> o.index(); }
    bool operator==(const YearMonth& o) const { return index() == o.index(); }

    YearMonth next() const {
        return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1};
    }
    YearMonth shifted(int delta) const {
        const int idx = index() + delta;
        const int y = idx >= 0 ? idx / 12 : -((-idx + 11) / 12);
        return YearMonth{y, idx - y * 12 + 1};
    }
};

struct Date {
    int year = 0;
    int month = 0;  // 1..12
    int day = 0;    // 1..31

    YearMonth year_month() const { return YearMonth{year, month}; }
    auto operator<=>(const Date&) const = default;
};

std::string to_string(const YearMonth& ym);  // "YYYY-MM"
std::string to_string(const Date& d);        // "YYYY-MM-DD"

// Strict parsers; throw std::invalid_argument with the offending text.
YearMonth parse_year_month(const std::string& text);
Date parse_date(const std::string& text);

}  // namespace gmidas

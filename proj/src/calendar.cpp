#include "gmidas/calendar.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace gmidas {

namespace {

int parse_int_field(const std::string& text, std::size_t pos, std::size_t len) {
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = first + len;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("malformed date field in '" + text + "'");
    }
    return value;
}

}  // namespace

std::string to_string(const YearMonth& ym) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", ym.year, ym.month);
    return buf;
}

std::string to_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

YearMonth parse_year_month(const std::string& text) {
    if (text.size() != 7 || text[4] != '-') {
        throw std::invalid_argument("expected YYYY-MM, got '" + text + "'");
    }
    YearMonth ym{parse_int_field(text, 0, 4), parse_int_field(text, 5, 2)};
    if (ym.month < 1 || ym.month > 12) {
        throw std::invalid_argument("month out of range in '" + text + "'");
    }
    return ym;
}

Date parse_date(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw std::invalid_argument("expected YYYY-MM-DD, got '" + text + "'");
    }
    Date d{parse_int_field(text, 0, 4), parse_int_field(text, 5, 2),
           parse_int_field(text, 8, 2)};
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) {
        throw std::invalid_argument("date out of range in '" + text + "'");
    }
    return d;
}

}  // namespace gmidas

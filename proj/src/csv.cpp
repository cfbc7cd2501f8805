#include "gmidas/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "gmidas/errors.hpp"

namespace gmidas {

namespace {

struct Row {
    std::string key;
    double value;
    std::size_t line;
};

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
    return s.substr(b);
}

double parse_value(const std::string& text, const std::filesystem::path& file,
                   std::size_t line) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw io_error(file.string() + ":" + std::to_string(line) +
                       ": cannot parse value '" + text + "'");
    }
    if (!std::isfinite(value)) {
        throw io_error(file.string() + ":" + std::to_string(line) +
                       ": non-finite value '" + text + "'");
    }
    return value;
}

std::vector<Row> read_rows(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw io_error("cannot open '" + file.string() + "'");
    std::vector<Row> rows;
    std::string linebuf;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, linebuf)) {
        ++lineno;
        const std::string line = strip(linebuf);
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw io_error(file.string() + ":" + std::to_string(lineno) +
                           ": expected 'key,value'");
        }
        const std::string key = strip(line.substr(0, comma));
        const std::string val = strip(line.substr(comma + 1));
        if (!saw_header) {
            // first line must be a header, not data
            if (!key.empty() && (std::isdigit(static_cast<unsigned char>(key[0])))) {
                throw io_error(file.string() + ":1: header row required");
            }
            saw_header = true;
            continue;
        }
        rows.push_back(Row{key, parse_value(val, file, lineno), lineno});
    }
    if (!saw_header) throw io_error(file.string() + ": empty file, header row required");
    return rows;
}

std::string stem_label(const std::filesystem::path& file, std::string label) {
    return label.empty() ? file.stem().string() : label;
}

void format_value(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

DailySeries read_daily_csv(const std::filesystem::path& file, std::string label) {
    DailySeries s;
    s.label = stem_label(file, std::move(label));
    for (const Row& row : read_rows(file)) {
        Date d;
        try {
            d = parse_date(row.key);
        } catch (const std::invalid_argument& e) {
            throw io_error(file.string() + ":" + std::to_string(row.line) + ": " + e.what());
        }
        if (!s.dates.empty() && !(s.dates.back() < d)) {
            throw io_error(file.string() + ":" + std::to_string(row.line) +
                           ": rows not sorted by date (" + to_string(d) + ")");
        }
        s.dates.push_back(d);
        s.values.push_back(row.value);
    }
    if (s.size() == 0) throw io_error(file.string() + ": no data rows");
    return s;
}

MonthlySeries read_monthly_csv(const std::filesystem::path& file, std::string label) {
    MonthlySeries s;
    s.label = stem_label(file, std::move(label));
    for (const Row& row : read_rows(file)) {
        YearMonth ym;
        try {
            ym = parse_year_month(row.key);
        } catch (const std::invalid_argument& e) {
            throw io_error(file.string() + ":" + std::to_string(row.line) + ": " + e.what());
        }
        if (!s.months.empty()) {
            if (!(s.months.back() < ym)) {
                throw io_error(file.string() + ":" + std::to_string(row.line) +
                               ": rows not sorted by month (" + to_string(ym) + ")");
            }
            if (ym.index() != s.months.back().index() + 1) {
                throw io_error(file.string() + ":" + std::to_string(row.line) +
                               ": gap in monthly series before " + to_string(ym));
            }
        }
        s.months.push_back(ym);
        s.values.push_back(row.value);
    }
    if (s.size() == 0) throw io_error(file.string() + ": no data rows");
    return s;
}

void write_daily_csv(const std::filesystem::path& file, const DailySeries& s,
                     const std::string& value_header) {
    std::string out = "date," + value_header + "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += to_string(s.dates[i]);
        out += ',';
        format_value(out, s.values[i]);
        out += '\n';
    }
    std::ofstream f(file);
    if (!f) throw io_error("cannot write '" + file.string() + "'");
    f << out;
}

void write_monthly_csv(const std::filesystem::path& file, const MonthlySeries& s,
                       const std::string& value_header) {
    std::string out = "month," + value_header + "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += to_string(s.months[i]);
        out += ',';
        format_value(out, s.values[i]);
        out += '\n';
    }
    std::ofstream f(file);
    if (!f) throw io_error("cannot write '" + file.string() + "'");
    f << out;
}

}  // namespace gmidas

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gmidas/calendar.hpp"

namespace gmidas {

// Daily observations with strictly increasing dates.
struct DailySeries {
    std::string label;
    std::vector<Date> dates;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

// Monthly observations, strictly increasing and gap-free.
struct MonthlySeries {
    std::string label;
    std::vector<YearMonth> months;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    // Index of a calendar month, or npos when absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find(const YearMonth& ym) const;
};

void validate(const DailySeries& s);    // throws std::invalid_argument
void validate(const MonthlySeries& s);  // throws std::invalid_argument

// One calendar month inside a ReturnPanel's flat day sequence.
struct MonthBlock {
    YearMonth month;
    std::size_t first = 0;  // index into the flat arrays
    std::size_t count = 0;  // N_t
};

// Daily returns grouped by calendar month; the flat arrays are the
// chronological view, `months` the per-month blocks over them.
struct ReturnPanel {
    std::vector<Date> dates;
    std::vector<double> returns;
    std::vector<MonthBlock> months;

    std::size_t days() const { return returns.size(); }
};

struct Stats {
    std::size_t n = 0;
    double max = 0, min = 0, mean = 0;
    double std_dev = 0;   // sample, n-1 denominator
    double skewness = 0;  // m3 / m2^(3/2), central moments with n denominator
    double kurtosis = 0;  // m4 / m2^2, non-excess (Gaussian -> 3)
};

// r[k] = ln P[k] - ln P[k-step], dated at the later day.
DailySeries log_returns(const DailySeries& prices, std::size_t step = 1);

DailySeries scale_returns(const DailySeries& r, double factor = 100.0);

// Elementwise natural log; rejects non-positive values naming the month.
MonthlySeries log_transform(const MonthlySeries& mv);

// Group daily returns into calendar months.
ReturnPanel align_monthly(const DailySeries& returns);

// RV_t: sum of squared daily returns of month t.
double realized_vol_fixed(const ReturnPanel& panel, const YearMonth& t);

// Per-month RV over the whole panel.
std::vector<double> monthly_realized_vol(const ReturnPanel& panel);

// RV over the trailing `window` days before day i (exclusive). Requires
// i >= window; the error message carries the first valid index.
double realized_vol_rolling(std::span<const double> returns, std::size_t i,
                            std::size_t window);

// Full rolling-RV path; entries before `window` are NaN placeholders.
std::vector<double> rolling_realized_vol(std::span<const double> returns,
                                         std::size_t window);

// Broadcast each trading day's month value onto the day (no look-ahead).
DailySeries expand_monthly_to_daily(const MonthlySeries& mv,
                                    std::span<const Date> calendar);

// Mean of the trailing `window` values before day i (exclusive).
double rolling_macro(std::span<const double> mv_daily, std::size_t i,
                     std::size_t window);

// Full rolling-mean path; entries before `window` are NaN placeholders.
std::vector<double> rolling_mean(std::span<const double> values,
                                 std::size_t window);

Stats descriptive_stats(std::span<const double> values);

}  // namespace gmidas

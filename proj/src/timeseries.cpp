#include "gmidas/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gmidas {

std::size_t MonthlySeries::find(const YearMonth& ym) const {
    if (months.empty()) return npos;
    const int offset = ym.index() - months.front().index();
    if (offset < 0 || static_cast<std::size_t>(offset) >= months.size()) return npos;
    return static_cast<std::size_t>(offset);  // gap-free, so position == offset
}

void validate(const DailySeries& s) {
    if (s.dates.size() != s.values.size()) {
        throw std::invalid_argument("daily series '" + s.label +
                                    "': dates/values length mismatch");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isfinite(s.values[i])) {
            throw std::invalid_argument("daily series '" + s.label +
                                        "': non-finite value at " + to_string(s.dates[i]));
        }
        if (i > 0 && !(s.dates[i - 1] < s.dates[i])) {
            throw std::invalid_argument("daily series '" + s.label +
                                        "': dates not strictly increasing at " +
                                        to_string(s.dates[i]));
        }
    }
}

void validate(const MonthlySeries& s) {
    if (s.months.size() != s.values.size()) {
        throw std::invalid_argument("monthly series '" + s.label +
                                    "': months/values length mismatch");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isfinite(s.values[i])) {
            throw std::invalid_argument("monthly series '" + s.label +
                                        "': non-finite value at " + to_string(s.months[i]));
        }
        if (i > 0 && s.months[i].index() != s.months[i - 1].index() + 1) {
            throw std::invalid_argument("monthly series '" + s.label +
                                        "': gap or disorder before " +
                                        to_string(s.months[i]));
        }
    }
}

DailySeries log_returns(const DailySeries& prices, std::size_t step) {
    if (step == 0) throw std::invalid_argument("log_returns: step must be positive");
    if (prices.size() < step + 1) {
        throw std::invalid_argument("log_returns: series '" + prices.label + "' has " +
                                    std::to_string(prices.size()) +
                                    " points, needs at least " + std::to_string(step + 1));
    }
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!(prices.values[i] > 0.0)) {
            throw std::domain_error("log_returns: non-positive price at " +
                                    to_string(prices.dates[i]));
        }
    }
    DailySeries out;
    out.label = prices.label + " log-returns";
    out.dates.assign(prices.dates.begin() + static_cast<std::ptrdiff_t>(step),
                     prices.dates.end());
    out.values.resize(prices.size() - step);
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        out.values[k] = std::log(prices.values[k + step]) - std::log(prices.values[k]);
    }
    return out;
}

DailySeries scale_returns(const DailySeries& r, double factor) {
    if (!(factor > 0.0)) throw std::invalid_argument("scale_returns: factor must be > 0");
    DailySeries out = r;
    for (double& v : out.values) v *= factor;
    out.label = r.label + " x" + std::to_string(factor);
    return out;
}

MonthlySeries log_transform(const MonthlySeries& mv) {
    MonthlySeries out = mv;
    for (std::size_t i = 0; i < mv.size(); ++i) {
        if (!(mv.values[i] > 0.0)) {
            throw std::domain_error("log_transform: non-positive value in '" + mv.label +
                                    "' at " + to_string(mv.months[i]));
        }
        out.values[i] = std::log(mv.values[i]);
    }
    out.label = "log " + mv.label;
    return out;
}

ReturnPanel align_monthly(const DailySeries& returns) {
    if (returns.size() == 0) throw std::invalid_argument("align_monthly: empty series");
    validate(returns);
    ReturnPanel panel;
    panel.dates = returns.dates;
    panel.returns = returns.values;
    for (std::size_t i = 0; i < returns.size(); ++i) {
        const YearMonth ym = returns.dates[i].year_month();
        if (panel.months.empty() || !(panel.months.back().month == ym)) {
            panel.months.push_back(MonthBlock{ym, i, 1});
        } else {
            ++panel.months.back().count;
        }
    }
    return panel;
}

double realized_vol_fixed(const ReturnPanel& panel, const YearMonth& t) {
    for (const MonthBlock& b : panel.months) {
        if (b.month == t) {
            double rv = 0.0;
            for (std::size_t i = b.first; i < b.first + b.count; ++i) {
                rv += panel.returns[i] * panel.returns[i];
            }
            return rv;
        }
    }
    throw std::invalid_argument("realized_vol_fixed: month " + to_string(t) +
                                " not in panel");
}

std::vector<double> monthly_realized_vol(const ReturnPanel& panel) {
    std::vector<double> rv(panel.months.size(), 0.0);
    for (std::size_t t = 0; t < panel.months.size(); ++t) {
        const MonthBlock& b = panel.months[t];
        for (std::size_t i = b.first; i < b.first + b.count; ++i) {
            rv[t] += panel.returns[i] * panel.returns[i];
        }
    }
    return rv;
}

double realized_vol_rolling(std::span<const double> returns, std::size_t i,
                            std::size_t window) {
    if (window == 0) throw std::invalid_argument("realized_vol_rolling: window must be > 0");
    if (i < window || i > returns.size()) {
        throw std::invalid_argument("realized_vol_rolling: day " + std::to_string(i) +
                                    " lacks history; first valid index is " +
                                    std::to_string(window));
    }
    double rv = 0.0;
    for (std::size_t j = i - window; j < i; ++j) rv += returns[j] * returns[j];
    return rv;
}

std::vector<double> rolling_realized_vol(std::span<const double> returns,
                                         std::size_t window) {
    std::vector<double> out(returns.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = window; i < returns.size(); ++i) {
        out[i] = realized_vol_rolling(returns, i, window);
    }
    return out;
}

DailySeries expand_monthly_to_daily(const MonthlySeries& mv,
                                    std::span<const Date> calendar) {
    DailySeries out;
    out.label = mv.label + " (daily)";
    out.dates.assign(calendar.begin(), calendar.end());
    out.values.resize(calendar.size());
    for (std::size_t i = 0; i < calendar.size(); ++i) {
        const std::size_t idx = mv.find(calendar[i].year_month());
        if (idx == MonthlySeries::npos) {
            throw std::invalid_argument("expand_monthly_to_daily: series '" + mv.label +
                                        "' does not cover month " +
                                        to_string(calendar[i].year_month()));
        }
        out.values[i] = mv.values[idx];
    }
    return out;
}

double rolling_macro(std::span<const double> mv_daily, std::size_t i,
                     std::size_t window) {
    if (window == 0) throw std::invalid_argument("rolling_macro: window must be > 0");
    if (i < window || i > mv_daily.size()) {
        throw std::invalid_argument("rolling_macro: day " + std::to_string(i) +
                                    " lacks history; first valid index is " +
                                    std::to_string(window));
    }
    double sum = 0.0;
    for (std::size_t j = i - window; j < i; ++j) sum += mv_daily[j];
    return sum / static_cast<double>(window);
}

std::vector<double> rolling_mean(std::span<const double> values, std::size_t window) {
    std::vector<double> out(values.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = window; i < values.size(); ++i) {
        out[i] = rolling_macro(values, i, window);
    }
    return out;
}

Stats descriptive_stats(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw std::invalid_argument("descriptive_stats: need at least 2 observations");
    Stats s;
    s.n = n;
    s.max = *std::max_element(values.begin(), values.end());
    s.min = *std::min_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(n);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d = v - s.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    const double nf = static_cast<double>(n);
    s.std_dev = std::sqrt(m2 / (nf - 1.0));
    m2 /= nf;
    m3 /= nf;
    m4 /= nf;
    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis = m4 / (m2 * m2);
    }
    return s;
}

}  // namespace gmidas

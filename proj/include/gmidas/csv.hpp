#pragma once

#include <filesystem>
#include <string>

#include "gmidas/timeseries.hpp"

namespace gmidas {

// CSV ingestion. Both readers demand a header row, UTF-8, '.' decimals, and
// pre-sorted rows; violations raise io_error with the offending line number.
DailySeries read_daily_csv(const std::filesystem::path& file, std::string label = "");
MonthlySeries read_monthly_csv(const std::filesystem::path& file, std::string label = "");

void write_daily_csv(const std::filesystem::path& file, const DailySeries& s,
                     const std::string& value_header = "value");
void write_monthly_csv(const std::filesystem::path& file, const MonthlySeries& s,
                       const std::string& value_header = "value");

}  // namespace gmidas

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mdcoint/timeseries.hpp"

namespace mdcoint {

/// Column selection for load_csv: pairs of (CSV header, series label).
struct CsvSchema {
    std::string date_column = "date";
    std::vector<std::pair<std::string, std::string>> columns;
};

/// Reads a CSV with a header row and a leading date column (YYYY-MM or
/// YYYY-Qn). Returns one series per mapped column; frequency is inferred
/// from the date column. Gaps, missing columns and unparseable cells raise
/// DataError naming the offending row and column.
std::vector<TimeSeries> load_csv(const std::string& path, const CsvSchema& schema);

/// Writes a monthly panel as CSV (date first, '.' decimal point, values in
/// shortest round-trip form).
void write_panel_csv(const AlignedPanel& panel, const std::string& path);

/// Reads a panel written by write_panel_csv (or any monthly CSV).
AlignedPanel read_panel_csv(const std::string& path);

}  // namespace mdcoint

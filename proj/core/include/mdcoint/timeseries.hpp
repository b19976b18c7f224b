#pragma once

#include <string>
#include <vector>

#include "mdcoint/errors.hpp"
#include "mdcoint/matrix.hpp"

namespace mdcoint {

enum class Frequency { monthly, quarterly };

/// Calendar period at monthly or quarterly frequency, encoded so that
/// consecutive periods differ by one in `index`.
struct Period {
    Frequency freq = Frequency::monthly;
    int index = 0;  // monthly: year*12 + (month-1); quarterly: year*4 + (quarter-1)

    static Period monthly(int year, int month);
    static Period quarterly(int year, int quarter);

    /// Parses "YYYY-MM" or "YYYY-Qn".
    static Period parse(const std::string& text);

    int year() const;
    int subperiod() const;  // month 1..12 or quarter 1..4
    Period next() const { return {freq, index + 1}; }
    std::string to_string() const;

    bool operator==(const Period& o) const { return freq == o.freq && index == o.index; }
    bool operator!=(const Period& o) const { return !(*this == o); }
};

/// Dated series of finite values on a contiguous period index.
class TimeSeries {
public:
    TimeSeries(std::string name, Period start, std::vector<double> values);

    const std::string& name() const { return name_; }
    Frequency frequency() const { return start_.freq; }
    Period start() const { return start_; }
    Period period(std::size_t i) const { return {start_.freq, start_.index + static_cast<int>(i)}; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    /// Same index, new values (element-wise transforms keep the dates).
    TimeSeries with_values(std::string name, std::vector<double> values) const;

private:
    std::string name_;
    Period start_;
    std::vector<double> values_;
};

/// Monthly panel: one shared contiguous index, uniquely named equal-length columns.
class AlignedPanel {
public:
    AlignedPanel(Period start, std::vector<std::string> names,
                 std::vector<std::vector<double>> columns);

    std::size_t rows() const { return columns_.empty() ? 0 : columns_.front().size(); }
    std::size_t cols() const { return columns_.size(); }
    Period start() const { return start_; }
    Period period(std::size_t row) const { return {start_.freq, start_.index + static_cast<int>(row)}; }

    const std::vector<std::string>& names() const { return names_; }
    bool has_column(const std::string& name) const;
    const std::vector<double>& column(std::size_t j) const { return columns_[j]; }
    const std::vector<double>& column(const std::string& name) const;

    /// Extracts named columns into a regression design matrix.
    Matrix to_matrix(const std::vector<std::string>& names) const;

private:
    Period start_;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

/// Restricts monthly series to their common date range.
AlignedPanel align(const std::vector<TimeSeries>& series);

}  // namespace mdcoint

#include "mdcoint/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mdcoint {

Period Period::monthly(int year, int month) {
    if (month < 1 || month > 12) throw DataError("month out of range: " + std::to_string(month));
    return {Frequency::monthly, year * 12 + (month - 1)};
}

Period Period::quarterly(int year, int quarter) {
    if (quarter < 1 || quarter > 4)
        throw DataError("quarter out of range: " + std::to_string(quarter));
    return {Frequency::quarterly, year * 4 + (quarter - 1)};
}

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Period Period::parse(const std::string& text) {
    // "YYYY-MM" or "YYYY-Qn"
    auto dash = text.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= text.size())
        throw DataError("unparseable date '" + text + "' (expected YYYY-MM or YYYY-Qn)");
    const std::string ys = text.substr(0, dash);
    const std::string rest = text.substr(dash + 1);
    if (!all_digits(ys))
        throw DataError("unparseable year in date '" + text + "'");
    const int year = std::stoi(ys);
    if (rest.size() == 2 && (rest[0] == 'Q' || rest[0] == 'q')) {
        if (!std::isdigit(static_cast<unsigned char>(rest[1])))
            throw DataError("unparseable quarter in date '" + text + "'");
        return quarterly(year, rest[1] - '0');
    }
    if (rest.size() == 2 && all_digits(rest)) {
        return monthly(year, std::stoi(rest));
    }
    throw DataError("unparseable date '" + text + "' (expected YYYY-MM or YYYY-Qn)");
}

int Period::year() const {
    const int per = freq == Frequency::monthly ? 12 : 4;
    // floor division for negative indices
    int y = index / per;
    if (index < 0 && index % per != 0) --y;
    return y;
}

int Period::subperiod() const {
    const int per = freq == Frequency::monthly ? 12 : 4;
    int r = index % per;
    if (r < 0) r += per;
    return r + 1;
}

std::string Period::to_string() const {
    char buf[16];
    if (freq == Frequency::monthly)
        std::snprintf(buf, sizeof(buf), "%04d-%02d", year(), subperiod());
    else
        std::snprintf(buf, sizeof(buf), "%04d-Q%d", year(), subperiod());
    return buf;
}

TimeSeries::TimeSeries(std::string name, Period start, std::vector<double> values)
    : name_(std::move(name)), start_(start), values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw DomainError("series '" + name_ + "' has non-finite value at " +
                              period(i).to_string());
    }
}

TimeSeries TimeSeries::with_values(std::string name, std::vector<double> values) const {
    if (values.size() != values_.size())
        throw AlignmentError("with_values: length mismatch on series '" + name_ + "'");
    return TimeSeries(std::move(name), start_, std::move(values));
}

AlignedPanel::AlignedPanel(Period start, std::vector<std::string> names,
                           std::vector<std::vector<double>> columns)
    : start_(start), names_(std::move(names)), columns_(std::move(columns)) {
    if (start_.freq != Frequency::monthly)
        throw AlignmentError("panel index must be monthly");
    if (names_.size() != columns_.size())
        throw AlignmentError("panel has " + std::to_string(names_.size()) + " names but " +
                             std::to_string(columns_.size()) + " columns");
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].size() != columns_.front().size())
            throw AlignmentError("panel column '" + names_[j] + "' length differs");
        for (std::size_t k = 0; k < j; ++k) {
            if (names_[k] == names_[j])
                throw AlignmentError("duplicate panel column name '" + names_[j] + "'");
        }
    }
}

bool AlignedPanel::has_column(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

const std::vector<double>& AlignedPanel::column(const std::string& name) const {
    for (std::size_t j = 0; j < names_.size(); ++j) {
        if (names_[j] == name) return columns_[j];
    }
    throw AlignmentError("panel has no column '" + name + "'");
}

Matrix AlignedPanel::to_matrix(const std::vector<std::string>& names) const {
    std::vector<std::vector<double>> cols;
    cols.reserve(names.size());
    for (const auto& n : names) cols.push_back(column(n));
    return Matrix::from_columns(cols);
}

AlignedPanel align(const std::vector<TimeSeries>& series) {
    if (series.empty()) throw AlignmentError("align: no series given");
    int lo = series.front().start().index;
    int hi = series.front().start().index + static_cast<int>(series.front().size());
    for (const auto& s : series) {
        if (s.frequency() != Frequency::monthly)
            throw AlignmentError("align: series '" + s.name() + "' is not monthly");
        lo = std::max(lo, s.start().index);
        hi = std::min(hi, s.start().index + static_cast<int>(s.size()));
    }
    if (hi <= lo) throw AlignmentError("align: series date ranges do not overlap");
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;
    for (const auto& s : series) {
        const int off = lo - s.start().index;
        names.push_back(s.name());
        cols.emplace_back(s.values().begin() + off,
                          s.values().begin() + off + (hi - lo));
    }
    return AlignedPanel({Frequency::monthly, lo}, std::move(names), std::move(cols));
}

}  // namespace mdcoint

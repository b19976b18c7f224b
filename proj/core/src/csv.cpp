#include "mdcoint/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mdcoint/format.hpp"

namespace mdcoint {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& col) {
    const std::string t = trim(cell);
    double v = 0.0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw DataError("row " + std::to_string(row) + ", column '" + col +
                        "': unparseable value '" + cell + "'");
    if (!std::isfinite(v))
        throw DataError("row " + std::to_string(row) + ", column '" + col +
                        "': non-finite value '" + cell + "'");
    return v;
}

}  // namespace

std::vector<TimeSeries> load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw DataError("'" + path + "' is empty");
    const auto header = split_line(line);

    auto col_index = [&](const std::string& name) -> std::size_t {
        for (std::size_t j = 0; j < header.size(); ++j)
            if (header[j] == name) return j;
        throw DataError("'" + path + "' has no column '" + name + "'");
    };

    const std::size_t date_idx = col_index(schema.date_column);
    std::vector<std::size_t> idx;
    for (const auto& [csv_name, label] : schema.columns) idx.push_back(col_index(csv_name));

    std::vector<std::vector<double>> data(schema.columns.size());
    Period start{};
    Period expected{};
    bool first = true;
    std::size_t row = 1;  // header is row 1
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() < header.size())
            throw DataError("row " + std::to_string(row) + ": expected " +
                            std::to_string(header.size()) + " cells, got " +
                            std::to_string(cells.size()));
        const Period p = Period::parse(cells[date_idx]);
        if (first) {
            start = p;
            expected = p;
            first = false;
        } else {
            if (p.freq != start.freq)
                throw DataError("row " + std::to_string(row) + ": date '" + cells[date_idx] +
                                "' changes frequency");
            if (p != expected)
                throw DataError("row " + std::to_string(row) + ": expected " +
                                expected.to_string() + ", got " + p.to_string() +
                                " (gap or disorder in date column)");
        }
        expected = expected.next();
        for (std::size_t c = 0; c < idx.size(); ++c)
            data[c].push_back(parse_cell(cells[idx[c]], row, schema.columns[c].first));
    }
    if (first) throw DataError("'" + path + "' has a header but no data rows");

    std::vector<TimeSeries> out;
    out.reserve(schema.columns.size());
    for (std::size_t c = 0; c < schema.columns.size(); ++c)
        out.emplace_back(schema.columns[c].second, start, std::move(data[c]));
    return out;
}

void write_panel_csv(const AlignedPanel& panel, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << "date";
    for (const auto& n : panel.names()) out << "," << n;
    out << "\n";
    for (std::size_t i = 0; i < panel.rows(); ++i) {
        out << panel.period(i).to_string();
        for (std::size_t j = 0; j < panel.cols(); ++j)
            out << "," << format_shortest(panel.column(j)[i]);
        out << "\n";
    }
}

AlignedPanel read_panel_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw DataError("'" + path + "' is empty");
    const auto header = split_line(line);
    if (header.size() < 2) throw DataError("'" + path + "': panel needs a date and one column");

    CsvSchema schema;
    schema.date_column = header.front();
    for (std::size_t j = 1; j < header.size(); ++j) schema.columns.push_back({header[j], header[j]});
    const auto series = load_csv(path, schema);
    return align(series);
}

}  // namespace mdcoint

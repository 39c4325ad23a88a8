#include "orlicz/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz::csv {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        auto b = cell.find_first_not_of(" \t\r");
        auto e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
    }
    return cells;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string format(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) throw std::logic_error("csv row width differs from header");
    rows_.push_back(std::move(row));
}

std::string Table::str() const {
    std::ostringstream os;
    auto emit = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << '\n';
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
    return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::vector<std::vector<double>> read_columns(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open CSV file " + path.string());
    std::vector<std::vector<double>> columns;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split(line);
        std::vector<double> row(cells.size());
        bool numeric = true;
        for (std::size_t i = 0; i < cells.size(); ++i) numeric = numeric && parse_double(cells[i], row[i]);
        if (!numeric) {
            if (columns.empty() && line_no == 1) continue;  // header
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": non-numeric cell");
        }
        if (columns.empty()) columns.resize(row.size());
        if (row.size() != columns.size())
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": wrong number of columns");
        for (std::size_t i = 0; i < row.size(); ++i) columns[i].push_back(row[i]);
    }
    if (columns.empty()) throw ConfigError(path.string() + ": no data rows");
    return columns;
}

}  // namespace orlicz::csv

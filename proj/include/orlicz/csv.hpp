#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace orlicz::csv {

/// Shortest decimal string that round-trips to the same double.
std::string format(double value);

class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row);
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// One column per function, one row per atom. A first row that does not
/// parse as numbers is treated as a header.
std::vector<std::vector<double>> read_columns(const std::filesystem::path& path);

}  // namespace orlicz::csv

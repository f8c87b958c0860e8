#include "core/csvio.hpp"

#include <cstdio>
#include <stdexcept>

namespace ergo::io {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), ncols_(header.size()) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out_ << header[i] << (i + 1 < header.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != ncols_)
        throw std::runtime_error("csv row width mismatch");
    char buf[32];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
        out_ << buf << (i + 1 < values.size() ? "," : "\n");
    }
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
    if (cells.size() != ncols_)
        throw std::runtime_error("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i)
        out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
}

}  // namespace ergo::io

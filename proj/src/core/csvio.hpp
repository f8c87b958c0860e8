#pragma once
// Minimal CSV emitter: header row mandatory, full double precision.

#include <fstream>
#include <string>
#include <vector>

namespace ergo::io {

class CsvWriter {
   public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& cells);

   private:
    std::ofstream out_;
    std::size_t ncols_;
};

}  // namespace ergo::io

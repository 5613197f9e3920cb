#ifndef QSZASZ_CSV_HPP
#define QSZASZ_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

namespace qszasz {

/// Locale-free formatting: 17 significant digits, '.' decimal point. Two
/// runs over the same data produce byte-identical files.
std::string csv_double(double v);
std::string csv_long(long v);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    void row(const std::vector<std::string>& cells);

private:
    std::ofstream out_;
};

} // namespace qszasz

#endif

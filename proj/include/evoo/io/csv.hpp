#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace evoo::io {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

/// Strict full-token numeric parsing; throws SchemaError with `what`
/// context on failure.
double parse_double(const std::string& token, const std::string& what);
long parse_long(const std::string& token, const std::string& what);

/// Minimal comma-separated reader: UTF-8, mandatory header row, no quoting
/// (the canonical schemas contain no commas inside fields).
class CsvReader {
public:
    explicit CsvReader(const std::string& path);

    const std::vector<std::string>& header() const { return header_; }
    /// Column index by name; -1 when the column is absent.
    int column(const std::string& name) const;
    /// Next data row split into fields; false at end of file.
    bool next(std::vector<std::string>& fields);
    std::size_t line_number() const { return line_; }
    const std::string& path() const { return path_; }

    /// SchemaError with file/line context prepended.
    [[noreturn]] void fail(const std::string& msg) const;

private:
    std::string path_;
    std::ifstream in_;
    std::vector<std::string> header_;
    std::size_t line_ = 0;
};

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    void row(const std::vector<std::string>& fields);

private:
    std::ofstream out_;
};

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace evoo::io

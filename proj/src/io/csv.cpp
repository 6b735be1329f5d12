#include "evoo/io/csv.hpp"

#include <charconv>
#include <system_error>

#include "evoo/errors.hpp"

namespace evoo::io {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& token, const std::string& what) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = first + token.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last || token.empty()) {
        throw SchemaError("invalid number for " + what + ": '" + token + "'");
    }
    return v;
}

long parse_long(const std::string& token, const std::string& what) {
    long v = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last || token.empty()) {
        throw SchemaError("invalid integer for " + what + ": '" + token + "'");
    }
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
        fields.back().pop_back();
    }
    return fields;
}

CsvReader::CsvReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) {
        throw SchemaError("cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(in_, line)) {
        throw SchemaError(path + ": empty file (header row is mandatory)");
    }
    line_ = 1;
    header_ = split_csv_line(line);
}

int CsvReader::column(const std::string& name) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (header_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

bool CsvReader::next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (line.empty() || line == "\r") continue;
        fields = split_csv_line(line);
        return true;
    }
    return false;
}

void CsvReader::fail(const std::string& msg) const {
    throw SchemaError(path_ + ":" + std::to_string(line_) + ": " + msg);
}

CsvWriter::CsvWriter(const std::string& path) : out_(path) {
    if (!out_) {
        throw SchemaError("cannot open '" + path + "' for writing");
    }
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << fields[i];
    }
    out_ << '\n';
}

}  // namespace evoo::io

#include <algorithm>

#include "evoo/errors.hpp"
#include "evoo/io/csv.hpp"
#include "evoo/io/tables.hpp"

namespace evoo::io {

UvLoadResult load_uv_table(const std::string& path, DeltaKVariant variant) {
    CsvReader reader(path);
    UvLoadResult result;

    const char* required[] = {"oil_label", "ageing_step", "k232", "k264", "k268", "k272"};
    int cols[6];
    for (int i = 0; i < 6; ++i) {
        cols[i] = reader.column(required[i]);
        if (cols[i] < 0) {
            reader.fail(std::string("missing required column '") + required[i] + "'");
        }
    }
    const int delta_col = reader.column("delta_k");
    for (const std::string& name : reader.header()) {
        if (name == "delta_k") continue;
        if (std::find(std::begin(required), std::end(required), name) == std::end(required)) {
            result.warnings.push_back(path + ": ignoring unknown column '" + name + "'");
        }
    }

    std::vector<std::string> fields;
    while (reader.next(fields)) {
        if (fields.size() != reader.header().size()) {
            reader.fail("expected " + std::to_string(reader.header().size()) + " fields, got " +
                        std::to_string(fields.size()));
        }
        try {
            auto optional_field = [&](int col, const char* what) -> std::optional<double> {
                if (col < 0 || fields[col].empty()) return std::nullopt;
                return parse_double(fields[col], what);
            };
            auto rec = UVRecord::make(
                fields[cols[0]], static_cast<int>(parse_long(fields[cols[1]], "ageing_step")),
                parse_double(fields[cols[2]], "k232"), parse_double(fields[cols[4]], "k268"),
                optional_field(cols[3], "k264"), optional_field(cols[5], "k272"),
                optional_field(delta_col, "delta_k"), variant);
            if (rec.delta_k_unverifiable) {
                result.warnings.push_back(path + ":" + std::to_string(reader.line_number()) +
                                          ": delta_k for (" + rec.oil_label + ", step " +
                                          std::to_string(rec.ageing_step) +
                                          ") is unverifiable (k264/k272 absent)");
            }
            result.records.push_back(std::move(rec));
        } catch (const Error& e) {
            reader.fail(e.what());
        }
    }
    if (result.records.empty()) {
        throw SchemaError(path + ": no data rows");
    }

    std::sort(result.records.begin(), result.records.end(),
              [](const UVRecord& a, const UVRecord& b) {
                  return std::tie(a.oil_label, a.ageing_step) <
                         std::tie(b.oil_label, b.ageing_step);
              });
    for (std::size_t i = 1; i < result.records.size(); ++i) {
        if (result.records[i].oil_label == result.records[i - 1].oil_label &&
            result.records[i].ageing_step == result.records[i - 1].ageing_step) {
            throw SchemaError(path + ": duplicate UV record (" + result.records[i].oil_label +
                              ", step " + std::to_string(result.records[i].ageing_step) + ")");
        }
    }
    return result;
}

void write_uv_table(const std::string& path, const std::vector<UVRecord>& records) {
    std::vector<const UVRecord*> sorted;
    sorted.reserve(records.size());
    for (const auto& r : records) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const UVRecord* a, const UVRecord* b) {
        return std::tie(a->oil_label, a->ageing_step) < std::tie(b->oil_label, b->ageing_step);
    });

    CsvWriter w(path);
    w.row({"oil_label", "ageing_step", "k232", "k264", "k268", "k272", "delta_k"});
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : ""; };
    for (const UVRecord* r : sorted) {
        w.row({r->oil_label, std::to_string(r->ageing_step), format_double(r->k232),
               opt(r->k264), format_double(r->k268), opt(r->k272), opt(r->delta_k_value)});
    }
}

}  // namespace evoo::io

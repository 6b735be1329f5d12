#include <algorithm>
#include <cmath>
#include <tuple>

#include "evoo/errors.hpp"
#include "evoo/io/csv.hpp"
#include "evoo/io/tables.hpp"

namespace evoo::io {

namespace {

struct FlatRow {
    std::string oil;
    int step;
    int replicate;
    double ex;
    double em;
    double intensity;

    std::tuple<const std::string&, int, int, double, double> key() const {
        return {oil, step, replicate, ex, em};
    }
};

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

EemLoadResult load_eem_table(const std::string& path, const WavelengthGrid* expected) {
    CsvReader reader(path);
    EemLoadResult result;

    const char* required[] = {"oil_label", "ageing_step", "replicate",
                              "excitation_nm", "emission_nm", "intensity"};
    int cols[6];
    for (int i = 0; i < 6; ++i) {
        cols[i] = reader.column(required[i]);
        if (cols[i] < 0) {
            reader.fail(std::string("missing required column '") + required[i] + "'");
        }
    }
    for (const std::string& name : reader.header()) {
        if (std::find(std::begin(required), std::end(required), name) == std::end(required)) {
            result.warnings.push_back(path + ": ignoring unknown column '" + name + "'");
        }
    }

    std::vector<FlatRow> rows;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        if (fields.size() != reader.header().size()) {
            reader.fail("expected " + std::to_string(reader.header().size()) + " fields, got " +
                        std::to_string(fields.size()));
        }
        try {
            FlatRow r;
            r.oil = fields[cols[0]];
            r.step = static_cast<int>(parse_long(fields[cols[1]], "ageing_step"));
            r.replicate = static_cast<int>(parse_long(fields[cols[2]], "replicate"));
            r.ex = parse_double(fields[cols[3]], "excitation_nm");
            r.em = parse_double(fields[cols[4]], "emission_nm");
            r.intensity = parse_double(fields[cols[5]], "intensity");
            rows.push_back(std::move(r));
        } catch (const SchemaError& e) {
            reader.fail(e.what());
        }
    }
    if (rows.empty()) {
        throw SchemaError(path + ": no data rows");
    }

    // canonical in-memory order regardless of file order
    std::sort(rows.begin(), rows.end(),
              [](const FlatRow& a, const FlatRow& b) { return a.key() < b.key(); });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].key() == rows[i - 1].key()) {
            throw SchemaError(path + ": duplicate row for (" + rows[i].oil + ", step " +
                              std::to_string(rows[i].step) + ", replicate " +
                              std::to_string(rows[i].replicate) + ", " +
                              format_double(rows[i].ex) + " nm, " + format_double(rows[i].em) +
                              " nm)");
        }
    }

    // one grid for the whole file, inferred from all rows
    std::vector<double> ex_axis, em_axis;
    for (const auto& r : rows) {
        ex_axis.push_back(r.ex);
        em_axis.push_back(r.em);
    }
    WavelengthGrid grid(sorted_unique(std::move(ex_axis)), sorted_unique(std::move(em_axis)));
    if (expected && grid != *expected) {
        result.warnings.push_back(path + ": grid differs from the default instrument grid (" +
                                  std::to_string(grid.n_excitation()) + "x" +
                                  std::to_string(grid.n_emission()) + ")");
    }
    const std::size_t per_sample = grid.n_excitation() * grid.n_emission();

    for (std::size_t start = 0; start < rows.size();) {
        const auto& first = rows[start];
        std::size_t end = start;
        while (end < rows.size() && rows[end].oil == first.oil && rows[end].step == first.step &&
               rows[end].replicate == first.replicate) {
            ++end;
        }
        Matrix intensity(grid.n_excitation(), grid.n_emission());
        std::size_t i = start;
        for (std::size_t r = 0; r < grid.n_excitation(); ++r) {
            for (std::size_t c = 0; c < grid.n_emission(); ++c) {
                const double want_ex = grid.excitation()[r];
                const double want_em = grid.emission()[c];
                if (i >= end || rows[i].ex != want_ex || rows[i].em != want_em) {
                    throw SchemaError(path + ": grid inconsistency for (" + first.oil +
                                      ", step " + std::to_string(first.step) + ", replicate " +
                                      std::to_string(first.replicate) + ", excitation " +
                                      format_double(want_ex) + " nm)");
                }
                intensity.at(r, c) = rows[i].intensity;
                ++i;
            }
        }
        if (end - start != per_sample) {
            throw SchemaError(path + ": grid inconsistency for (" + first.oil + ", step " +
                              std::to_string(first.step) + ", replicate " +
                              std::to_string(first.replicate) + ")");
        }
        SampleMeta meta{first.oil, first.step, days_for_step(first.step), first.replicate};
        try {
            result.eems.emplace_back(grid, std::move(intensity), std::move(meta));
        } catch (const Error& e) {
            throw SchemaError(path + ": invalid EEM (" + first.oil + ", step " +
                              std::to_string(first.step) + ", replicate " +
                              std::to_string(first.replicate) + "): " + e.what());
        }
        start = end;
    }
    return result;
}

void write_eem_table(const std::string& path, const std::vector<EEM>& eems) {
    // canonical output order
    std::vector<const EEM*> sorted;
    sorted.reserve(eems.size());
    for (const EEM& e : eems) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(), [](const EEM* a, const EEM* b) {
        return std::tuple(a->meta().oil_label, a->meta().ageing_step, a->meta().replicate) <
               std::tuple(b->meta().oil_label, b->meta().ageing_step, b->meta().replicate);
    });

    CsvWriter w(path);
    w.row({"oil_label", "ageing_step", "replicate", "excitation_nm", "emission_nm", "intensity"});
    for (const EEM* e : sorted) {
        const auto& grid = e->grid();
        const auto& meta = e->meta();
        for (std::size_t r = 0; r < grid.n_excitation(); ++r) {
            for (std::size_t c = 0; c < grid.n_emission(); ++c) {
                w.row({meta.oil_label, std::to_string(meta.ageing_step),
                       std::to_string(meta.replicate), format_double(grid.excitation()[r]),
                       format_double(grid.emission()[c]), format_double(e->intensity().at(r, c))});
            }
        }
    }
}

Dataset load_dataset(const std::string& eem_path, const std::string& uv_path,
                     DeltaKVariant variant, std::vector<std::string>* warnings) {
    Dataset data;
    auto eems = load_eem_table(eem_path);
    for (auto& e : eems.eems) data.add_eem(std::move(e));
    auto uv = load_uv_table(uv_path, variant);
    for (auto& r : uv.records) data.add_uv(std::move(r));
    if (warnings) {
        warnings->insert(warnings->end(), eems.warnings.begin(), eems.warnings.end());
        warnings->insert(warnings->end(), uv.warnings.begin(), uv.warnings.end());
    }
    return data;
}

}  // namespace evoo::io

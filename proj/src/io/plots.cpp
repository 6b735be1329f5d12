#include "evoo/io/plots.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include "evoo/errors.hpp"
#include "evoo/features.hpp"
#include "evoo/io/csv.hpp"
#include "evoo/spectra.hpp"

namespace evoo::io {

PlotKind plot_kind_from_string(const std::string& s) {
    if (s == "uv_series") return PlotKind::uv_series;
    if (s == "emission_evolution") return PlotKind::emission_evolution;
    if (s == "diff_map") return PlotKind::diff_map;
    if (s == "re_scatter") return PlotKind::re_scatter;
    if (s == "metric_bars") return PlotKind::metric_bars;
    throw NotFoundError("unknown plot kind '" + s + "'");
}

std::string to_string(PlotKind kind) {
    switch (kind) {
        case PlotKind::uv_series: return "uv_series";
        case PlotKind::emission_evolution: return "emission_evolution";
        case PlotKind::diff_map: return "diff_map";
        case PlotKind::re_scatter: return "re_scatter";
        case PlotKind::metric_bars: return "metric_bars";
    }
    return "?";
}

namespace {

namespace fs = std::filesystem;

// ------------------------------------------------------------- tiny SVG

struct SvgCanvas {
    std::ofstream out;
    double width, height;

    SvgCanvas(const std::string& path, double w, double h) : out(path), width(w), height(h) {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
            << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
        out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    }
    void line(double x1, double y1, double x2, double y2, const std::string& color,
              double sw = 1.0) {
        out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"" << color << "\" stroke-width=\"" << sw << "\"/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color,
                  double sw) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << sw
            << "\" points=\"";
        for (const auto& [x, y] : pts) out << x << ',' << y << ' ';
        out << "\"/>\n";
    }
    void rect(double x, double y, double w, double h, const std::string& fill) {
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
            << "\" fill=\"" << fill << "\"/>\n";
    }
    void text(double x, double y, const std::string& s, int size = 11) {
        out << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
            << "\" font-family=\"sans-serif\">" << s << "</text>\n";
    }
    void close() { out << "</svg>\n"; }
};

struct Axes {
    double x0 = 55, y0 = 360, x1 = 620, y1 = 20;  // plot area in canvas coords
    double xmin, xmax, ymin, ymax;

    double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * (x1 - x0); }
    double py(double y) const { return y0 + (y - ymin) / (ymax - ymin) * (y1 - y0); }
};

void draw_axes(SvgCanvas& svg, const Axes& ax, const std::string& xlabel,
               const std::string& ylabel) {
    svg.line(ax.x0, ax.y0, ax.x1, ax.y0, "black");
    svg.line(ax.x0, ax.y0, ax.x0, ax.y1, "black");
    svg.text(ax.x1 - 40, ax.y0 + 30, xlabel);
    svg.text(8, ax.y1 + 10, ylabel);
    for (int i = 0; i <= 4; ++i) {
        const double fx = ax.xmin + (ax.xmax - ax.xmin) * i / 4.0;
        const double fy = ax.ymin + (ax.ymax - ax.ymin) * i / 4.0;
        svg.text(ax.px(fx) - 8, ax.y0 + 14, format_double(std::round(fx * 100) / 100));
        svg.text(ax.x0 - 45, ax.py(fy) + 4, format_double(std::round(fy * 1000) / 1000));
    }
}

// --------------------------------------------------------------- helpers

double coefficient_threshold(const std::string& name) {
    if (name == "k268") return kK268Limit;
    if (name == "k232") return kK232Limit;
    if (name == "delta_k") return kDeltaKLimit;
    throw NotFoundError("unknown coefficient '" + name + "'");
}

std::optional<double> coefficient_value(const UVRecord& rec, const std::string& name) {
    if (name == "k268") return rec.k268;
    if (name == "k232") return rec.k232;
    return rec.delta_k_value;
}

std::vector<std::string> selected_oils(const PlotSelection& sel, const Dataset& data,
                                       bool from_uv) {
    std::vector<std::string> oils = sel.oils;
    if (oils.empty()) {
        if (from_uv) {
            for (const auto& [key, rec] : data.uv_records()) {
                if (oils.empty() || oils.back() != key.first) oils.push_back(key.first);
            }
        } else {
            oils = data.oils();
        }
    }
    if (oils.empty()) {
        throw DomainError("empty oil selection");
    }
    return oils;
}

// ------------------------------------------------------------- exporters

std::vector<std::string> export_uv_series(const PlotSelection& sel, const Dataset& data,
                                          const std::string& out_dir) {
    const auto oils = selected_oils(sel, data, true);
    const double threshold = coefficient_threshold(sel.coefficient);

    const std::string csv_path = (fs::path(out_dir) / ("uv_series_" + sel.coefficient + ".csv")).string();
    CsvWriter w(csv_path);
    std::vector<std::string> header{"ageing_days"};
    header.insert(header.end(), oils.begin(), oils.end());
    header.push_back("mean");
    header.push_back("threshold");
    w.row(header);

    std::vector<std::vector<std::pair<double, double>>> lines(oils.size());
    std::vector<std::pair<double, double>> mean_line;
    double ymax = threshold;
    for (int step = 0; step < kNumSteps; ++step) {
        const double days = kAgeingDays[step];
        std::vector<std::string> row{format_double(days)};
        double sum = 0.0;
        int count = 0;
        for (std::size_t i = 0; i < oils.size(); ++i) {
            if (!data.has_uv(oils[i], step)) {
                row.push_back("");
                continue;
            }
            const auto v = coefficient_value(data.uv(oils[i], step), sel.coefficient);
            if (!v) {
                row.push_back("");
                continue;
            }
            row.push_back(format_double(*v));
            lines[i].push_back({days, *v});
            ymax = std::max(ymax, *v);
            sum += *v;
            count += 1;
        }
        if (count > 0) {
            const double mean = sum / count;
            row.push_back(format_double(mean));
            mean_line.push_back({days, mean});
        } else {
            row.push_back("");
        }
        row.push_back(format_double(threshold));
        w.row(row);
    }

    const std::string svg_path = (fs::path(out_dir) / ("uv_series_" + sel.coefficient + ".svg")).string();
    SvgCanvas svg(svg_path, 640, 400);
    Axes ax;
    ax.xmin = 0;
    ax.xmax = kAgeingDays.back();
    ax.ymin = 0;
    ax.ymax = ymax * 1.05;
    draw_axes(svg, ax, "days at 60 C", sel.coefficient);
    auto to_canvas = [&](const std::vector<std::pair<double, double>>& pts) {
        std::vector<std::pair<double, double>> out;
        for (const auto& [x, y] : pts) out.push_back({ax.px(x), ax.py(y)});
        return out;
    };
    for (const auto& line : lines) {
        if (!line.empty()) svg.polyline(to_canvas(line), "#9aa0a6", 1.0);
    }
    if (!mean_line.empty()) svg.polyline(to_canvas(mean_line), "black", 2.5);
    svg.line(ax.px(ax.xmin), ax.py(threshold), ax.px(ax.xmax), ax.py(threshold), "red", 1.5);
    svg.close();

    return {csv_path, svg_path};
}

std::vector<std::string> export_emission_evolution(const PlotSelection& sel, const Dataset& data,
                                                   const std::string& out_dir) {
    const auto oils = selected_oils(sel, data, false);
    std::vector<std::string> written;
    for (const auto& oil : oils) {
        const auto steps = data.steps(oil);
        if (steps.empty()) {
            throw NotFoundError("no EEMs for oil " + oil);
        }
        const auto& grid = *data.grid();
        const auto ex_idx = grid.excitation_index(sel.excitation_nm);
        if (!ex_idx) {
            throw NotFoundError("excitation wavelength " + format_double(sel.excitation_nm) +
                                " nm is not on the grid");
        }
        const std::string path =
            (fs::path(out_dir) / ("emission_" + oil + "_ex" +
                                  std::to_string(static_cast<int>(sel.excitation_nm)) + ".csv"))
                .string();
        CsvWriter w(path);
        std::vector<std::string> header{"emission_nm"};
        std::vector<std::vector<double>> rows;  // replicate means per step, unmasked
        for (int step : steps) {
            header.push_back("step_" + std::to_string(step));
            const auto reps = data.replicates(oil, step);
            std::vector<double> mean(grid.n_emission(), 0.0);
            for (const EEM* e : reps) {
                const auto row = e->intensity().row(*ex_idx);
                for (std::size_t c = 0; c < mean.size(); ++c) mean[c] += row[c];
            }
            for (double& v : mean) v /= static_cast<double>(reps.size());
            rows.push_back(std::move(mean));
        }
        w.row(header);
        for (std::size_t c = 0; c < grid.n_emission(); ++c) {
            std::vector<std::string> row{format_double(grid.emission()[c])};
            for (const auto& r : rows) row.push_back(format_double(r[c]));
            w.row(row);
        }
        written.push_back(path);
    }
    return written;
}

std::vector<std::string> export_diff_map(const PlotSelection& sel, const Dataset& data,
                                         const std::string& out_dir) {
    const auto oils = selected_oils(sel, data, false);
    if (sel.steps.empty()) {
        throw DomainError("empty step selection for diff_map");
    }
    std::vector<std::string> written;
    for (const auto& oil : oils) {
        const auto fresh_reps = data.replicates(oil, 0);
        if (fresh_reps.empty()) {
            throw NotFoundError("no fresh EEMs for oil " + oil);
        }
        const auto& grid = *data.grid();
        auto mean_of = [&](int step) {
            const auto reps = data.replicates(oil, step);
            if (reps.empty()) {
                throw NotFoundError("no EEMs for (" + oil + ", step " + std::to_string(step) +
                                    ")");
            }
            Matrix m(grid.n_excitation(), grid.n_emission());
            for (const EEM* e : reps) {
                auto src = e->intensity().data();
                auto dst = m.data();
                for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
            }
            for (double& v : m.data()) v /= static_cast<double>(reps.size());
            return m;
        };
        const Matrix fresh = mean_of(0);
        for (int step : sel.steps) {
            const Matrix aged = mean_of(step);
            const std::string path =
                (fs::path(out_dir) /
                 ("diff_" + oil + "_step" + std::to_string(step) + ".csv"))
                    .string();
            CsvWriter w(path);
            std::vector<std::string> header{"excitation_nm"};
            for (double em : grid.emission()) header.push_back(format_double(em));
            w.row(header);
            for (std::size_t r = 0; r < grid.n_excitation(); ++r) {
                std::vector<std::string> row{format_double(grid.excitation()[r])};
                for (std::size_t c = 0; c < grid.n_emission(); ++c) {
                    row.push_back(format_double(aged.at(r, c) - fresh.at(r, c)));
                }
                w.row(row);
            }
            written.push_back(path);
        }
    }
    return written;
}

std::vector<std::string> export_re_scatter(const PlotSelection& sel, const Dataset& data,
                                           const std::string& out_dir) {
    const auto oils = selected_oils(sel, data, false);
    const auto& grid = *data.grid();
    const auto i1 = grid.excitation_index(sel.lambdas.primary_nm);
    const auto i2 = grid.excitation_index(sel.lambdas.secondary_nm);
    if (!i1 || !i2) {
        throw NotFoundError("selected wavelengths are not on the excitation grid");
    }
    std::vector<std::string> written;
    for (const auto& oil : oils) {
        const Matrix reference = masked_mean_intensity(data, oil, 0);
        const std::string path = (fs::path(out_dir) / ("re_uv_" + oil + ".csv")).string();
        CsvWriter w(path);
        w.row({"ageing_step", "ageing_days", "re_lambda1", "re_lambda2", "k232", "k268",
               "delta_k"});
        for (int step : data.steps(oil)) {
            if (step == 0) continue;
            const Matrix aged = masked_mean_intensity(data, oil, step);
            const double re1 = relative_error(reference.row(*i1), aged.row(*i1));
            const double re2 = relative_error(reference.row(*i2), aged.row(*i2));
            std::string k232 = "", k268 = "", dk = "";
            if (data.has_uv(oil, step)) {
                const auto& rec = data.uv(oil, step);
                k232 = format_double(rec.k232);
                k268 = format_double(rec.k268);
                if (rec.delta_k_value) dk = format_double(*rec.delta_k_value);
            }
            w.row({std::to_string(step), std::to_string(days_for_step(step)),
                   format_double(re1), format_double(re2), k232, k268, dk});
        }
        written.push_back(path);
    }
    return written;
}

std::vector<std::string> export_metric_bars(const std::vector<ProtocolResult>* results,
                                            const std::string& out_dir) {
    if (!results || results->empty()) {
        throw DomainError("no validation results to plot");
    }
    const std::string csv_path = (fs::path(out_dir) / "metric_bars.csv").string();
    write_metric_bars_csv(csv_path, *results);

    const std::string svg_path = (fs::path(out_dir) / "metric_bars.svg").string();
    SvgCanvas svg(svg_path, 640, 400);
    Axes ax;
    ax.xmin = 0;
    ax.xmax = static_cast<double>(results->size());
    ax.ymin = 0;
    ax.ymax = 1.05;
    draw_axes(svg, ax, "protocol", "metric");
    const char* colors[3] = {"#4285f4", "#34a853", "#fbbc04"};  // acc, sens, spec
    for (std::size_t i = 0; i < results->size(); ++i) {
        const auto& r = (*results)[i];
        const std::optional<double> vals[3] = {r.mean_accuracy, r.mean_sensitivity,
                                               r.mean_specificity};
        for (int m = 0; m < 3; ++m) {
            if (!vals[m]) continue;
            const double x = ax.px(i + 0.15 + 0.25 * m);
            const double h = ax.py(0) - ax.py(*vals[m]);
            svg.rect(x, ax.py(*vals[m]), 0.2 * (ax.px(1) - ax.px(0)), h, colors[m]);
        }
        svg.text(ax.px(i + 0.1), ax.y0 + 26,
                 "m" + std::to_string(r.protocol.method()) + " " + to_string(r.criterion) + " " +
                     r.protocol.training_label(),
                 8);
    }
    svg.close();
    return {csv_path, svg_path};
}

}  // namespace

std::vector<std::string> export_plot_data(PlotKind kind, const PlotSelection& sel,
                                          const Dataset& data,
                                          const std::vector<ProtocolResult>* results,
                                          const std::string& out_dir) {
    fs::create_directories(out_dir);
    switch (kind) {
        case PlotKind::uv_series: return export_uv_series(sel, data, out_dir);
        case PlotKind::emission_evolution: return export_emission_evolution(sel, data, out_dir);
        case PlotKind::diff_map: return export_diff_map(sel, data, out_dir);
        case PlotKind::re_scatter: return export_re_scatter(sel, data, out_dir);
        case PlotKind::metric_bars: return export_metric_bars(results, out_dir);
    }
    throw NotFoundError("unknown plot kind");
}

}  // namespace evoo::io

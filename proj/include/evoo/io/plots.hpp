#pragma once

#include <string>
#include <vector>

#include "evoo/dataset.hpp"
#include "evoo/validate.hpp"

namespace evoo::io {

enum class PlotKind { uv_series, emission_evolution, diff_map, re_scatter, metric_bars };

PlotKind plot_kind_from_string(const std::string& s);
std::string to_string(PlotKind kind);

struct PlotSelection {
    std::vector<std::string> oils;     // empty selects all oils where sensible
    std::string coefficient = "k268";  // uv_series: k268 | k232 | delta_k
    double excitation_nm = 480.0;      // emission_evolution
    std::vector<int> steps;            // diff_map: aged steps vs fresh
    LambdaPair lambdas;                // re_scatter
};

/// Writes plot-ready CSV files (and a small SVG rendering for the series
/// and bar kinds) under `out_dir`; returns the paths written.
/// Throws NotFoundError for an unknown kind or missing data and
/// DomainError for an empty selection.
std::vector<std::string> export_plot_data(PlotKind kind, const PlotSelection& sel,
                                          const Dataset& data,
                                          const std::vector<ProtocolResult>* results,
                                          const std::string& out_dir);

}  // namespace evoo::io

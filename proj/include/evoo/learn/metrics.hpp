#pragma once

#include <optional>
#include <span>

namespace evoo::learn {

/// Confusion counts and the derived ratios with respect to a declared
/// positive class. Empty denominators yield absent values, never 0.
struct MetricsReport {
    long tp = 0, tn = 0, fp = 0, fn = 0;
    int positive_class = 0;
    std::optional<double> accuracy;
    std::optional<double> sensitivity;  // TP / (TP + FN)
    std::optional<double> specificity;  // TN / (TN + FP)
};

/// The default positive class is 0 ("degraded"): the models are meant to
/// detect oils that have passed the regulatory thresholds.
MetricsReport metrics(std::span<const int> y_true, std::span<const int> y_pred,
                      int positive_class = 0);

}  // namespace evoo::learn

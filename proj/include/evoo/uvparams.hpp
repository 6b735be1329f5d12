#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evoo {

/// EU regulatory limits for extra virgin olive oil.
inline constexpr double kK268Limit = 0.22;
inline constexpr double kK232Limit = 2.5;
inline constexpr double kDeltaKLimit = 0.01;

/// Which extinction coefficient derives the class label.
enum class Criterion { k268, k232 };

std::string to_string(Criterion c);
Criterion criterion_from_string(const std::string& s);

/// Formula used to combine K264/K268/K272 into delta-K.
///   as_printed: K268 - (K264 - K272)/2
///   midpoint:   K268 - (K264 + K272)/2
enum class DeltaKVariant { as_printed, midpoint };

std::string to_string(DeltaKVariant v);
DeltaKVariant delta_k_variant_from_string(const std::string& s);

/// Delta-K from the three UV extinction coefficients.
/// Throws DomainError on negative or non-finite input.
double delta_k(double k264, double k268, double k272,
               DeltaKVariant variant = DeltaKVariant::as_printed);

/// UV extinction coefficients of one oil at one ageing step.
///
/// K264/K272 may be absent in ingested data; delta_k_value is then taken
/// as-is (if present) and flagged unverifiable.
struct UVRecord {
    std::string oil_label;
    int ageing_step = 0;
    double k232 = 0.0;
    double k268 = 0.0;
    std::optional<double> k264;
    std::optional<double> k272;
    std::optional<double> delta_k_value;
    bool delta_k_unverifiable = false;

    /// Validates fields, recomputes delta_k when absent and verifies it
    /// (tolerance 1e-12) when present and verifiable.
    static UVRecord make(std::string oil_label, int ageing_step, double k232, double k268,
                         std::optional<double> k264 = std::nullopt,
                         std::optional<double> k272 = std::nullopt,
                         std::optional<double> delta_k_value = std::nullopt,
                         DeltaKVariant variant = DeltaKVariant::as_printed);
};

/// Binary quality class: 1 = within the EVOO limit, 0 = limit exceeded.
/// Exact equality with the limit maps to class 0.
struct QualityClass {
    int value = 0;
    Criterion criterion = Criterion::k268;
};

QualityClass label(const UVRecord& record, Criterion criterion);

/// Endpoint ageing statistics of a (days, coefficient) series.
struct AgeingStats {
    double rate_per_day = 0.0;
    std::optional<double> percent_change;  // absent when the first value is <= 0
};

/// Series must be sorted by days, have >= 2 points, start at day 0 and span
/// a nonzero number of days; throws DomainError otherwise.
AgeingStats ageing_stats(const std::vector<std::pair<double, double>>& series);

}  // namespace evoo

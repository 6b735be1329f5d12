#include "evoo/uvparams.hpp"

#include <cmath>

#include "evoo/errors.hpp"

namespace evoo {

std::string to_string(Criterion c) {
    return c == Criterion::k268 ? "k268" : "k232";
}

Criterion criterion_from_string(const std::string& s) {
    if (s == "k268" || s == "K268") return Criterion::k268;
    if (s == "k232" || s == "K232") return Criterion::k232;
    throw DomainError("unknown criterion '" + s + "' (expected k268 or k232)");
}

std::string to_string(DeltaKVariant v) {
    return v == DeltaKVariant::as_printed ? "as-printed" : "midpoint";
}

DeltaKVariant delta_k_variant_from_string(const std::string& s) {
    if (s == "as-printed" || s == "as_printed") return DeltaKVariant::as_printed;
    if (s == "midpoint") return DeltaKVariant::midpoint;
    throw DomainError("unknown delta-k formula '" + s + "' (expected as-printed or midpoint)");
}

namespace {

void check_coefficient(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
        throw DomainError(std::string(name) + " must be finite and non-negative");
    }
}

}  // namespace

double delta_k(double k264, double k268, double k272, DeltaKVariant variant) {
    check_coefficient(k264, "k264");
    check_coefficient(k268, "k268");
    check_coefficient(k272, "k272");
    if (variant == DeltaKVariant::as_printed) {
        return k268 - (k264 - k272) / 2.0;
    }
    return k268 - (k264 + k272) / 2.0;
}

UVRecord UVRecord::make(std::string oil_label, int ageing_step, double k232, double k268,
                        std::optional<double> k264, std::optional<double> k272,
                        std::optional<double> delta_k_value, DeltaKVariant variant) {
    if (ageing_step < 0 || ageing_step > 9) {
        throw DomainError("ageing step out of range 0..9: " + std::to_string(ageing_step));
    }
    check_coefficient(k232, "k232");
    check_coefficient(k268, "k268");
    if (k264) check_coefficient(*k264, "k264");
    if (k272) check_coefficient(*k272, "k272");

    UVRecord rec;
    rec.oil_label = std::move(oil_label);
    rec.ageing_step = ageing_step;
    rec.k232 = k232;
    rec.k268 = k268;
    rec.k264 = k264;
    rec.k272 = k272;

    if (k264 && k272) {
        const double computed = delta_k(*k264, k268, *k272, variant);
        if (delta_k_value && std::abs(*delta_k_value - computed) > 1e-12) {
            throw DomainError("stored delta_k " + std::to_string(*delta_k_value) +
                              " disagrees with the " + to_string(variant) + " value " +
                              std::to_string(computed));
        }
        rec.delta_k_value = computed;
    } else {
        // cannot recompute: keep a provided value as-is, flagged unverifiable
        rec.delta_k_value = delta_k_value;
        rec.delta_k_unverifiable = delta_k_value.has_value();
    }
    return rec;
}

QualityClass label(const UVRecord& record, Criterion criterion) {
    QualityClass c;
    c.criterion = criterion;
    const double v = criterion == Criterion::k268 ? record.k268 : record.k232;
    const double limit = criterion == Criterion::k268 ? kK268Limit : kK232Limit;
    c.value = v < limit ? 1 : 0;  // equality exceeds the limit
    return c;
}

AgeingStats ageing_stats(const std::vector<std::pair<double, double>>& series) {
    if (series.size() < 2) {
        throw DomainError("ageing series needs at least 2 points");
    }
    if (series.front().first != 0.0) {
        throw DomainError("ageing series must start at day 0");
    }
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series[i].first < series[i - 1].first) {
            throw DomainError("ageing series must be sorted by days");
        }
    }
    const double span = series.back().first - series.front().first;
    if (span <= 0.0) {
        throw DomainError("ageing series spans zero days");
    }
    AgeingStats stats;
    const double first = series.front().second;
    const double last = series.back().second;
    stats.rate_per_day = (last - first) / span;
    if (first > 0.0) {
        stats.percent_change = 100.0 * (last - first) / first;
    }
    return stats;
}

}  // namespace evoo

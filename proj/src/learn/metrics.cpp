#include "evoo/learn/metrics.hpp"

#include <string>

#include "evoo/errors.hpp"

namespace evoo::learn {

MetricsReport metrics(std::span<const int> y_true, std::span<const int> y_pred,
                      int positive_class) {
    if (y_true.size() != y_pred.size()) {
        throw MismatchError("prediction/label lengths differ: " + std::to_string(y_true.size()) +
                            " vs " + std::to_string(y_pred.size()));
    }
    if (y_true.empty()) {
        throw DomainError("metrics need at least one sample");
    }

    MetricsReport r;
    r.positive_class = positive_class;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const bool actual_pos = y_true[i] == positive_class;
        const bool predicted_pos = y_pred[i] == positive_class;
        if (actual_pos && predicted_pos) r.tp += 1;
        else if (actual_pos && !predicted_pos) r.fn += 1;
        else if (!actual_pos && predicted_pos) r.fp += 1;
        else r.tn += 1;
    }
    r.accuracy = static_cast<double>(r.tp + r.tn) / static_cast<double>(y_true.size());
    if (r.tp + r.fn > 0) {
        r.sensitivity = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn);
    }
    if (r.tn + r.fp > 0) {
        r.specificity = static_cast<double>(r.tn) / static_cast<double>(r.tn + r.fp);
    }
    return r;
}

}  // namespace evoo::learn

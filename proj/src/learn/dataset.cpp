#include "evoo/learn/dataset.hpp"

#include <algorithm>

#include "evoo/errors.hpp"

namespace evoo::learn {

std::array<std::size_t, 2> LabeledSet::class_counts() const {
    std::array<std::size_t, 2> counts{0, 0};
    for (int y : labels) {
        if (y != 0 && y != 1) {
            throw DomainError("labels must be 0 or 1");
        }
        counts[static_cast<std::size_t>(y)] += 1;
    }
    return counts;
}

LabeledSet oversample(const LabeledSet& set, std::mt19937_64& rng) {
    if (set.features.size() != set.labels.size()) {
        throw MismatchError("feature/label lengths differ");
    }
    const auto counts = set.class_counts();
    if (counts[0] == 0 || counts[1] == 0) {
        throw TrainingError("oversample requires both classes to be present");
    }

    LabeledSet out;
    out.criterion = set.criterion;
    out.features = set.features;
    out.labels = set.labels;

    if (counts[0] != counts[1]) {
        const int minority = counts[0] < counts[1] ? 0 : 1;
        std::vector<std::size_t> minority_idx;
        for (std::size_t i = 0; i < set.labels.size(); ++i) {
            if (set.labels[i] == minority) minority_idx.push_back(i);
        }
        const std::size_t n_min = minority_idx.size();
        const std::size_t n_maj = set.labels.size() - n_min;
        const std::size_t deficit = n_maj - n_min;
        const std::size_t whole = deficit / n_min;
        const std::size_t remainder = deficit % n_min;

        for (std::size_t round = 0; round < whole; ++round) {
            for (std::size_t i : minority_idx) {
                out.features.push_back(set.features[i]);
                out.labels.push_back(set.labels[i]);
            }
        }
        // remainder drawn without replacement
        std::vector<std::size_t> pool = minority_idx;
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t j = 0; j < remainder; ++j) {
            out.features.push_back(set.features[pool[j]]);
            out.labels.push_back(set.labels[pool[j]]);
        }
    }

    std::vector<std::size_t> order(out.labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    LabeledSet shuffled;
    shuffled.criterion = out.criterion;
    shuffled.features.reserve(order.size());
    shuffled.labels.reserve(order.size());
    for (std::size_t i : order) {
        shuffled.features.push_back(std::move(out.features[i]));
        shuffled.labels.push_back(out.labels[i]);
    }
    return shuffled;
}

}  // namespace evoo::learn

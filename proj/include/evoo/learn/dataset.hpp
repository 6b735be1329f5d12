#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "evoo/uvparams.hpp"

namespace evoo::learn {

/// Relative errors at the two selected excitation wavelengths for one
/// (oil, ageing step), plus provenance.
struct FeatureVector {
    double re_primary = 0.0;
    double re_secondary = 0.0;
    std::string oil_label;
    int ageing_step = 0;
    int replicate = 0;  // 0 = replicate-mean row

    std::array<double, 2> values() const { return {re_primary, re_secondary}; }
};

/// Feature rows with binary class labels under one criterion.
struct LabeledSet {
    std::vector<FeatureVector> features;
    std::vector<int> labels;  // 0 or 1
    Criterion criterion = Criterion::k268;

    std::size_t size() const { return features.size(); }
    std::array<std::size_t, 2> class_counts() const;
};

/// Balance the classes by duplicating the whole minority set
/// floor((n_maj - n_min) / n_min) times and drawing the remainder from the
/// minority set without replacement; the result is shuffled.
/// Throws TrainingError when only one class is present.
LabeledSet oversample(const LabeledSet& set, std::mt19937_64& rng);

}  // namespace evoo::learn

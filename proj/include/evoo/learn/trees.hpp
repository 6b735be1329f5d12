#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace evoo::learn {

using Row = std::array<double, 2>;
inline constexpr int kNumFeatures = 2;

/// Depth-1 decision tree with Laplace-smoothed class-probability leaves.
/// Rows with x[feature] <= threshold fall into the left leaf.
struct Stump {
    int feature = 0;
    double threshold = 0.0;
    double p1_left = 0.5;   // P(class 1 | left leaf)
    double p1_right = 0.5;  // P(class 1 | right leaf)

    double p1(const Row& x) const { return x[feature] <= threshold ? p1_left : p1_right; }
    int predict(const Row& x) const { return p1(x) > 0.5 ? 1 : 0; }
};

/// Best weighted-Gini split on one feature; nullopt when the feature is
/// constant. Thresholds are midpoints between consecutive distinct values;
/// scan order makes ties deterministic (first best wins).
struct Split {
    double threshold = 0.0;
    double gini = 0.0;
};
std::optional<Split> best_split_on_feature(std::span<const Row> X, std::span<const int> y,
                                           std::span<const double> w, int feature);

/// Fit a stump over all features; throws TrainingError when no feature
/// admits a split.
Stump fit_stump(std::span<const Row> X, std::span<const int> y, std::span<const double> w);

/// Node of a shallow decision tree (random forest member).
struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int leaf_class = 0;
};

struct Tree {
    std::vector<TreeNode> nodes;
    int predict(const Row& x) const;
};

/// Grow a depth-limited tree on uniformly weighted data, choosing one
/// random feature per split (a node whose drawn feature cannot split
/// becomes a leaf; ties in the leaf majority go to class 0).
Tree grow_tree(std::span<const Row> X, std::span<const int> y,
               const std::vector<std::size_t>& indices, int max_depth, std::mt19937_64& rng);

}  // namespace evoo::learn

#include "evoo/learn/trees.hpp"

#include <algorithm>
#include <numeric>

#include "evoo/errors.hpp"

namespace evoo::learn {

std::optional<Split> best_split_on_feature(std::span<const Row> X, std::span<const int> y,
                                           std::span<const double> w, int feature) {
    const std::size_t n = X.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return X[a][feature] < X[b][feature];
    });

    double total_w = 0.0, total_w1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total_w += w[i];
        if (y[i] == 1) total_w1 += w[i];
    }

    std::optional<Split> best;
    double left_w = 0.0, left_w1 = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const std::size_t i = order[k];
        left_w += w[i];
        if (y[i] == 1) left_w1 += w[i];
        const double v = X[i][feature];
        const double next = X[order[k + 1]][feature];
        if (next <= v) continue;  // split only between distinct values

        const double right_w = total_w - left_w;
        const double right_w1 = total_w1 - left_w1;
        auto gini = [](double wc, double w1) {
            if (wc <= 0.0) return 0.0;
            const double p1 = w1 / wc;
            return wc * (1.0 - p1 * p1 - (1.0 - p1) * (1.0 - p1));
        };
        const double g = (gini(left_w, left_w1) + gini(right_w, right_w1)) / total_w;
        if (!best || g < best->gini) {
            best = Split{(v + next) / 2.0, g};
        }
    }
    return best;
}

namespace {

// Laplace add-1 smoothing over effective counts so pure leaves never
// produce infinite log-odds.
double smoothed_p1(double leaf_w1, double leaf_w, double total_w, std::size_t n) {
    const double scale = static_cast<double>(n) / total_w;
    return (leaf_w1 * scale + 1.0) / (leaf_w * scale + 2.0);
}

}  // namespace

Stump fit_stump(std::span<const Row> X, std::span<const int> y, std::span<const double> w) {
    std::optional<Split> best;
    int best_feature = -1;
    for (int f = 0; f < kNumFeatures; ++f) {
        auto split = best_split_on_feature(X, y, w, f);
        if (split && (!best || split->gini < best->gini)) {
            best = split;
            best_feature = f;
        }
    }
    if (!best) {
        throw TrainingError("no feature admits a split (all features constant)");
    }

    Stump stump;
    stump.feature = best_feature;
    stump.threshold = best->threshold;

    double total_w = 0.0;
    double lw = 0.0, lw1 = 0.0, rw = 0.0, rw1 = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        total_w += w[i];
        if (X[i][best_feature] <= stump.threshold) {
            lw += w[i];
            if (y[i] == 1) lw1 += w[i];
        } else {
            rw += w[i];
            if (y[i] == 1) rw1 += w[i];
        }
    }
    stump.p1_left = smoothed_p1(lw1, lw, total_w, X.size());
    stump.p1_right = smoothed_p1(rw1, rw, total_w, X.size());
    return stump;
}

int Tree::predict(const Row& x) const {
    int node = 0;
    while (nodes[node].feature >= 0) {
        node = x[nodes[node].feature] <= nodes[node].threshold ? nodes[node].left
                                                               : nodes[node].right;
    }
    return nodes[node].leaf_class;
}

namespace {

int majority_class(std::span<const int> y, const std::vector<std::size_t>& indices) {
    long ones = 0;
    for (std::size_t i : indices) ones += y[i];
    const long zeros = static_cast<long>(indices.size()) - ones;
    return ones > zeros ? 1 : 0;  // ties to class 0
}

int grow_node(std::span<const Row> X, std::span<const int> y, Tree& tree,
              const std::vector<std::size_t>& indices, int depth, int max_depth,
              std::mt19937_64& rng) {
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();

    bool pure = true;
    for (std::size_t i : indices) {
        if (y[i] != y[indices.front()]) {
            pure = false;
            break;
        }
    }
    if (depth >= max_depth || indices.size() < 2 || pure) {
        tree.nodes[id].leaf_class = majority_class(y, indices);
        return id;
    }

    // candidate set of size 1: one randomly drawn feature
    std::uniform_int_distribution<int> pick(0, kNumFeatures - 1);
    const int feature = pick(rng);

    std::vector<Row> sub_x;
    std::vector<int> sub_y;
    sub_x.reserve(indices.size());
    sub_y.reserve(indices.size());
    for (std::size_t i : indices) {
        sub_x.push_back(X[i]);
        sub_y.push_back(y[i]);
    }
    const std::vector<double> sub_w(indices.size(), 1.0);
    const auto split = best_split_on_feature(sub_x, sub_y, sub_w, feature);
    if (!split) {
        tree.nodes[id].leaf_class = majority_class(y, indices);
        return id;
    }

    std::vector<std::size_t> left_idx, right_idx;
    for (std::size_t i : indices) {
        (X[i][feature] <= split->threshold ? left_idx : right_idx).push_back(i);
    }
    tree.nodes[id].feature = feature;
    tree.nodes[id].threshold = split->threshold;
    const int left = grow_node(X, y, tree, left_idx, depth + 1, max_depth, rng);
    const int right = grow_node(X, y, tree, right_idx, depth + 1, max_depth, rng);
    tree.nodes[id].left = left;
    tree.nodes[id].right = right;
    return id;
}

}  // namespace

Tree grow_tree(std::span<const Row> X, std::span<const int> y,
               const std::vector<std::size_t>& indices, int max_depth, std::mt19937_64& rng) {
    Tree tree;
    grow_node(X, y, tree, indices, 0, max_depth, rng);
    return tree;
}

}  // namespace evoo::learn

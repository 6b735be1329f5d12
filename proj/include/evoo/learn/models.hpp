#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "evoo/learn/dataset.hpp"
#include "evoo/learn/trees.hpp"

namespace evoo::learn {

enum class Algorithm { adaboost, random_forest, logistic_regression, naive_bayes };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

/// Classifier choice plus the seed driving its random draws.
struct ModelSpec {
    Algorithm algorithm = Algorithm::adaboost;
    std::uint64_t rng_seed = 1;
};

/// Real-valued boosting (SAMME.R) over depth-1 stumps: 5 stages,
/// learning rate 1. Each stage contributes half-log-odds of its leaf
/// probabilities; the sample weights follow the SAMME.R update.
struct AdaBoostModel {
    static constexpr int kStages = 5;
    static constexpr double kLearningRate = 1.0;
    std::vector<Stump> stages;

    double decision(const Row& x, int n_stages = -1) const;
    int predict(const Row& x, int n_stages = -1) const;  // score 0 maps to class 0
};

/// Per-stage diagnostics captured during boosting (test support).
struct AdaBoostTrace {
    std::vector<std::vector<double>> stage_weights;  // after each stage update
};

AdaBoostModel fit_adaboost(std::span<const Row> X, std::span<const int> y,
                           AdaBoostTrace* trace = nullptr);

/// Bagged shallow trees: 100 trees of depth <= 2 on bootstrap resamples,
/// one random feature per split; majority vote (ties to class 0).
struct RandomForestModel {
    static constexpr int kTrees = 100;
    static constexpr int kMaxDepth = 2;
    std::vector<Tree> trees;

    int predict(const Row& x) const;
};

RandomForestModel fit_random_forest(std::span<const Row> X, std::span<const int> y,
                                    std::mt19937_64& rng);

/// Plain logistic regression fitted by full-batch gradient ascent on the
/// log-likelihood: step 0.1, at most 10000 iterations, stop when the
/// gradient infinity-norm drops below 1e-8.
struct LogisticModel {
    static constexpr double kStep = 0.1;
    static constexpr int kMaxIterations = 10000;
    static constexpr double kTolerance = 1e-8;
    std::array<double, 2> weights{0.0, 0.0};
    double bias = 0.0;
    bool converged = false;

    double probability(const Row& x) const;
    int predict(const Row& x) const { return probability(x) > 0.5 ? 1 : 0; }
};

/// Log-likelihood gradient (d/dw0, d/dw1, d/db) at the given parameters.
std::array<double, 3> logistic_gradient(std::span<const Row> X, std::span<const int> y,
                                        const std::array<double, 2>& weights, double bias);

LogisticModel fit_logistic(std::span<const Row> X, std::span<const int> y);

/// Gaussian naive Bayes with class priors from frequencies and a variance
/// floor of 1e-9 per feature.
struct NaiveBayesModel {
    static constexpr double kVarianceFloor = 1e-9;
    std::array<double, 2> log_prior{0.0, 0.0};
    std::array<std::array<double, 2>, 2> mean{};      // [class][feature]
    std::array<std::array<double, 2>, 2> variance{};  // [class][feature]

    double log_posterior_unnormalized(int cls, const Row& x) const;
    int predict(const Row& x) const;  // ties to class 0
};

NaiveBayesModel fit_naive_bayes(std::span<const Row> X, std::span<const int> y);

/// A trained classifier of any supported algorithm.
struct TrainedModel {
    Algorithm algorithm = Algorithm::adaboost;
    std::variant<AdaBoostModel, RandomForestModel, LogisticModel, NaiveBayesModel> impl;
    std::vector<std::string> warnings;
};

/// Train per the spec'd hyperparameters. The caller is expected to have
/// oversampled the set; an imbalance only produces a warning. Throws
/// TrainingError when fewer than 2 samples of a class are present.
TrainedModel train(const LabeledSet& set, const ModelSpec& spec);

std::vector<int> predict(const TrainedModel& model, const std::vector<FeatureVector>& features);

/// Versioned, self-describing text serialization; round-trips every
/// learned parameter exactly.
void save_model(std::ostream& os, const TrainedModel& model);
TrainedModel load_model(std::istream& is);

}  // namespace evoo::learn

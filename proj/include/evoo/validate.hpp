#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evoo/dataset.hpp"
#include "evoo/features.hpp"
#include "evoo/learn/dataset.hpp"
#include "evoo/learn/metrics.hpp"
#include "evoo/learn/models.hpp"

namespace evoo {

/// Selected excitation wavelength pair fed to the classifiers.
struct LambdaPair {
    double primary_nm = 480.0;
    double secondary_nm = 300.0;
};

/// One row per oil (replicate-mean features) or one per replicate.
enum class PopulationMode { per_oil, per_replicate };

/// Time-forward train/validate configuration.
///
/// Training steps are always a contiguous run starting at {4,5}; method 1
/// validates on step 9, method 2 on the step after the last training step.
/// The factories are the only way to construct one, so inconsistent
/// protocols cannot exist.
class ValidationProtocol {
public:
    static ValidationProtocol method1(int last_training_step);  // last in 5..8
    static ValidationProtocol method2(int last_training_step);  // last in 5..8
    static std::vector<ValidationProtocol> all();               // the 8 standard ones

    int method() const { return method_; }
    const std::vector<int>& training_steps() const { return training_steps_; }
    int validation_step() const { return validation_step_; }
    std::string training_label() const;  // e.g. "4|5|6"

private:
    ValidationProtocol(int method, int last_training_step);
    int method_;
    std::vector<int> training_steps_;
    int validation_step_;
};

/// RE features per (oil, step) computed once against each oil's fresh
/// reference.
class FeatureTable {
public:
    static FeatureTable build(const Dataset& data, const LambdaPair& lambdas,
                              PopulationMode mode = PopulationMode::per_oil);

    /// All rows for one step, labelled under `criterion` via the UV records.
    /// Throws NotFoundError listing every missing (oil, step) pair.
    void append_step(const Dataset& data, int step, Criterion criterion,
                     learn::LabeledSet& out) const;

    const LambdaPair& lambdas() const { return lambdas_; }
    PopulationMode mode() const { return mode_; }

private:
    LambdaPair lambdas_;
    PopulationMode mode_ = PopulationMode::per_oil;
    std::map<std::pair<std::string, int>, std::vector<learn::FeatureVector>> rows_;
};

/// Training and validation sets for one protocol. Guarantees that no
/// (oil, step) provenance appears in both.
std::pair<learn::LabeledSet, learn::LabeledSet> build_sets(const Dataset& data,
                                                           const ValidationProtocol& protocol,
                                                           Criterion criterion,
                                                           const FeatureTable& table);

/// A protocol's outcome over a seed sweep.
struct ProtocolResult {
    ValidationProtocol protocol;
    Criterion criterion = Criterion::k268;
    learn::Algorithm algorithm = learn::Algorithm::adaboost;
    LambdaPair lambdas;
    std::vector<std::uint64_t> seeds;
    std::vector<learn::MetricsReport> per_seed;
    // aggregate means; absent when any seed's value is undefined
    std::optional<double> mean_accuracy, mean_sensitivity, mean_specificity;
    std::optional<double> min_accuracy, max_accuracy;
    std::string note;  // e.g. small-sample perfect-metrics flag
};

/// Oversample + fit + predict + score once per seed, then aggregate.
ProtocolResult run_protocol(const Dataset& data, const ValidationProtocol& protocol,
                            Criterion criterion, const learn::ModelSpec& spec,
                            const std::vector<std::uint64_t>& seeds, const FeatureTable& table,
                            int positive_class = 0);

/// Per-seed rows plus mean/min/max rows in the documented column layout.
void write_results_csv(const std::string& path, const std::vector<ProtocolResult>& results,
                       DeltaKVariant dk_variant);

/// Plot-ready aggregate table (metric x protocol x criterion).
void write_metric_bars_csv(const std::string& path, const std::vector<ProtocolResult>& results);

}  // namespace evoo

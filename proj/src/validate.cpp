#include "evoo/validate.hpp"

#include <algorithm>
#include <set>

#include "evoo/errors.hpp"
#include "evoo/io/csv.hpp"

namespace evoo {

ValidationProtocol::ValidationProtocol(int method, int last_training_step) : method_(method) {
    if (method != 1 && method != 2) {
        throw DomainError("validation method must be 1 or 2");
    }
    if (last_training_step < 5 || last_training_step > 8) {
        throw DomainError("last training step must be in 5..8, got " +
                          std::to_string(last_training_step));
    }
    for (int s = 4; s <= last_training_step; ++s) training_steps_.push_back(s);
    validation_step_ = method == 1 ? 9 : last_training_step + 1;
}

ValidationProtocol ValidationProtocol::method1(int last_training_step) {
    return ValidationProtocol(1, last_training_step);
}

ValidationProtocol ValidationProtocol::method2(int last_training_step) {
    return ValidationProtocol(2, last_training_step);
}

std::vector<ValidationProtocol> ValidationProtocol::all() {
    std::vector<ValidationProtocol> out;
    for (int last = 5; last <= 8; ++last) out.push_back(method1(last));
    for (int last = 5; last <= 8; ++last) out.push_back(method2(last));
    return out;
}

std::string ValidationProtocol::training_label() const {
    std::string s;
    for (std::size_t i = 0; i < training_steps_.size(); ++i) {
        if (i) s += '|';
        s += std::to_string(training_steps_[i]);
    }
    return s;
}

FeatureTable FeatureTable::build(const Dataset& data, const LambdaPair& lambdas,
                                 PopulationMode mode) {
    const WavelengthGrid* grid = data.grid();
    if (!grid) {
        throw DomainError("dataset holds no EEMs");
    }
    for (double nm : {lambdas.primary_nm, lambdas.secondary_nm}) {
        if (!grid->excitation_index(nm)) {
            throw NotFoundError("selected wavelength " + io::format_double(nm) +
                                " nm is not on the excitation grid");
        }
    }

    FeatureTable table;
    table.lambdas_ = lambdas;
    table.mode_ = mode;
    const std::size_t i1 = *grid->excitation_index(lambdas.primary_nm);
    const std::size_t i2 = *grid->excitation_index(lambdas.secondary_nm);

    for (const std::string& oil : data.oils()) {
        const Matrix reference = masked_mean_intensity(data, oil, 0);
        for (int step : data.steps(oil)) {
            if (step == 0) continue;
            auto& rows = table.rows_[{oil, step}];
            if (mode == PopulationMode::per_oil) {
                const Matrix aged = masked_mean_intensity(data, oil, step);
                learn::FeatureVector f;
                f.re_primary = relative_error(reference.row(i1), aged.row(i1));
                f.re_secondary = relative_error(reference.row(i2), aged.row(i2));
                f.oil_label = oil;
                f.ageing_step = step;
                rows.push_back(std::move(f));
            } else {
                for (const EEM* rep : data.replicates(oil, step)) {
                    const EEM masked = mask_rayleigh(*rep);
                    learn::FeatureVector f;
                    f.re_primary =
                        relative_error(reference.row(i1), masked.intensity().row(i1));
                    f.re_secondary =
                        relative_error(reference.row(i2), masked.intensity().row(i2));
                    f.oil_label = oil;
                    f.ageing_step = step;
                    f.replicate = rep->meta().replicate;
                    rows.push_back(std::move(f));
                }
            }
        }
    }
    return table;
}

void FeatureTable::append_step(const Dataset& data, int step, Criterion criterion,
                               learn::LabeledSet& out) const {
    std::vector<std::string> missing;
    for (const std::string& oil : data.oils()) {
        auto it = rows_.find({oil, step});
        if (it == rows_.end() || !data.has_uv(oil, step)) {
            missing.push_back("(" + oil + ", step " + std::to_string(step) + ")");
            continue;
        }
        const int y = label(data.uv(oil, step), criterion).value;
        for (const auto& row : it->second) {
            out.features.push_back(row);
            out.labels.push_back(y);
        }
    }
    if (!missing.empty()) {
        std::string msg = "missing data for:";
        for (const auto& m : missing) msg += " " + m;
        throw NotFoundError(msg);
    }
}

std::pair<learn::LabeledSet, learn::LabeledSet> build_sets(const Dataset& data,
                                                           const ValidationProtocol& protocol,
                                                           Criterion criterion,
                                                           const FeatureTable& table) {
    learn::LabeledSet train, test;
    train.criterion = criterion;
    test.criterion = criterion;
    for (int step : protocol.training_steps()) {
        table.append_step(data, step, criterion, train);
    }
    table.append_step(data, protocol.validation_step(), criterion, test);

    // no-leakage invariant: training and validation provenance is disjoint
    std::set<std::pair<std::string, int>> train_keys;
    for (const auto& f : train.features) train_keys.insert({f.oil_label, f.ageing_step});
    for (const auto& f : test.features) {
        if (train_keys.contains({f.oil_label, f.ageing_step})) {
            throw DomainError("leakage: (" + f.oil_label + ", step " +
                              std::to_string(f.ageing_step) + ") in both sets");
        }
    }
    return {std::move(train), std::move(test)};
}

ProtocolResult run_protocol(const Dataset& data, const ValidationProtocol& protocol,
                            Criterion criterion, const learn::ModelSpec& spec,
                            const std::vector<std::uint64_t>& seeds, const FeatureTable& table,
                            int positive_class) {
    if (seeds.empty()) {
        throw DomainError("seed list is empty");
    }
    auto [train, test] = build_sets(data, protocol, criterion, table);

    ProtocolResult result{protocol, criterion, spec.algorithm, table.lambdas(), seeds, {},
                          {}, {}, {}, {}, {}, {}};
    std::vector<int> y_true;
    y_true.reserve(test.labels.size());
    for (int y : test.labels) y_true.push_back(y);

    for (std::uint64_t seed : seeds) {
        std::mt19937_64 rng(seed);
        const learn::LabeledSet balanced = learn::oversample(train, rng);
        learn::ModelSpec seeded = spec;
        seeded.rng_seed = rng();  // draws after the oversampling stream
        const learn::TrainedModel model = learn::train(balanced, seeded);
        const std::vector<int> y_pred = learn::predict(model, test.features);
        result.per_seed.push_back(learn::metrics(y_true, y_pred, positive_class));
    }

    auto aggregate = [&](auto getter) -> std::optional<double> {
        double sum = 0.0;
        for (const auto& m : result.per_seed) {
            const auto v = getter(m);
            if (!v) return std::nullopt;
            sum += *v;
        }
        return sum / static_cast<double>(result.per_seed.size());
    };
    result.mean_accuracy = aggregate([](const auto& m) { return m.accuracy; });
    result.mean_sensitivity = aggregate([](const auto& m) { return m.sensitivity; });
    result.mean_specificity = aggregate([](const auto& m) { return m.specificity; });
    if (result.mean_accuracy) {
        double lo = 1.0, hi = 0.0;
        for (const auto& m : result.per_seed) {
            lo = std::min(lo, *m.accuracy);
            hi = std::max(hi, *m.accuracy);
        }
        result.min_accuracy = lo;
        result.max_accuracy = hi;
    }

    // A perfect score on the smallest method-2 protocol is a known
    // small-sample artifact and is flagged rather than celebrated.
    if (protocol.method() == 2 && protocol.training_steps().size() == 2 &&
        result.mean_accuracy == 1.0 && result.mean_sensitivity == 1.0 &&
        result.mean_specificity == 1.0) {
        result.note = "perfect metrics on the smallest method-2 split; "
                      "small-sample artifact, not evidence of a perfect model";
    }
    return result;
}

namespace {

std::string opt_str(const std::optional<double>& v) {
    return v ? io::format_double(*v) : "undefined";
}

}  // namespace

void write_results_csv(const std::string& path, const std::vector<ProtocolResult>& results,
                       DeltaKVariant dk_variant) {
    io::CsvWriter w(path);
    w.row({"method", "criterion", "training_steps", "validation_step", "seed", "accuracy",
           "sensitivity", "specificity", "tp", "tn", "fp", "fn", "positive_class",
           "formula_variant", "lambda1", "lambda2"});
    for (const auto& r : results) {
        const std::string common_prefix[] = {std::to_string(r.protocol.method()),
                                             to_string(r.criterion), r.protocol.training_label(),
                                             std::to_string(r.protocol.validation_step())};
        for (std::size_t i = 0; i < r.seeds.size(); ++i) {
            const auto& m = r.per_seed[i];
            w.row({common_prefix[0], common_prefix[1], common_prefix[2], common_prefix[3],
                   std::to_string(r.seeds[i]), opt_str(m.accuracy), opt_str(m.sensitivity),
                   opt_str(m.specificity), std::to_string(m.tp), std::to_string(m.tn),
                   std::to_string(m.fp), std::to_string(m.fn),
                   std::to_string(m.positive_class), to_string(dk_variant),
                   io::format_double(r.lambdas.primary_nm),
                   io::format_double(r.lambdas.secondary_nm)});
        }
        const int positive = r.per_seed.empty() ? 0 : r.per_seed.front().positive_class;
        w.row({common_prefix[0], common_prefix[1], common_prefix[2], common_prefix[3], "mean",
               opt_str(r.mean_accuracy), opt_str(r.mean_sensitivity),
               opt_str(r.mean_specificity), "", "", "", "", std::to_string(positive),
               to_string(dk_variant), io::format_double(r.lambdas.primary_nm),
               io::format_double(r.lambdas.secondary_nm)});
    }
}

void write_metric_bars_csv(const std::string& path, const std::vector<ProtocolResult>& results) {
    io::CsvWriter w(path);
    w.row({"method", "criterion", "training_steps", "validation_step", "metric", "mean", "min",
           "max"});
    for (const auto& r : results) {
        auto bar = [&](const char* name, const std::optional<double>& mean,
                       const std::optional<double>& lo, const std::optional<double>& hi) {
            w.row({std::to_string(r.protocol.method()), to_string(r.criterion),
                   r.protocol.training_label(), std::to_string(r.protocol.validation_step()),
                   name, opt_str(mean), opt_str(lo), opt_str(hi)});
        };
        auto minmax = [&](auto getter) -> std::pair<std::optional<double>, std::optional<double>> {
            double lo = 1.0, hi = 0.0;
            for (const auto& m : r.per_seed) {
                const auto v = getter(m);
                if (!v) return {std::nullopt, std::nullopt};
                lo = std::min(lo, *v);
                hi = std::max(hi, *v);
            }
            return {lo, hi};
        };
        auto [alo, ahi] = minmax([](const auto& m) { return m.accuracy; });
        auto [slo, shi] = minmax([](const auto& m) { return m.sensitivity; });
        auto [plo, phi] = minmax([](const auto& m) { return m.specificity; });
        bar("accuracy", r.mean_accuracy, alo, ahi);
        bar("sensitivity", r.mean_sensitivity, slo, shi);
        bar("specificity", r.mean_specificity, plo, phi);
    }
}

}  // namespace evoo

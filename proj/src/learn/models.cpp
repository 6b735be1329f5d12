#include "evoo/learn/models.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "evoo/errors.hpp"
#include "evoo/io/csv.hpp"

namespace evoo::learn {

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::adaboost: return "adaboost";
        case Algorithm::random_forest: return "random_forest";
        case Algorithm::logistic_regression: return "logistic_regression";
        case Algorithm::naive_bayes: return "naive_bayes";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "adaboost") return Algorithm::adaboost;
    if (s == "random_forest") return Algorithm::random_forest;
    if (s == "logistic_regression") return Algorithm::logistic_regression;
    if (s == "naive_bayes") return Algorithm::naive_bayes;
    throw DomainError("unknown algorithm '" + s + "'");
}

// ---------------------------------------------------------------- AdaBoost

double AdaBoostModel::decision(const Row& x, int n_stages) const {
    const std::size_t limit =
        n_stages < 0 ? stages.size() : std::min<std::size_t>(n_stages, stages.size());
    double score = 0.0;
    for (std::size_t m = 0; m < limit; ++m) {
        const double p = stages[m].p1(x);
        score += 0.5 * (std::log(p) - std::log(1.0 - p));
    }
    return score;
}

int AdaBoostModel::predict(const Row& x, int n_stages) const {
    return decision(x, n_stages) > 0.0 ? 1 : 0;
}

AdaBoostModel fit_adaboost(std::span<const Row> X, std::span<const int> y, AdaBoostTrace* trace) {
    const std::size_t n = X.size();
    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    AdaBoostModel model;
    for (int m = 0; m < AdaBoostModel::kStages; ++m) {
        const Stump stump = fit_stump(X, y, w);
        model.stages.push_back(stump);

        // SAMME.R sample-weight update from the stage's class probabilities
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double p1 = stump.p1(X[i]);
            const double p_true = y[i] == 1 ? p1 : 1.0 - p1;
            const double half_log_odds = 0.5 * (std::log(p_true) - std::log(1.0 - p_true));
            w[i] *= std::exp(-AdaBoostModel::kLearningRate * half_log_odds);
            sum += w[i];
        }
        for (double& wi : w) wi /= sum;
        if (trace) trace->stage_weights.push_back(w);
    }
    return model;
}

// ----------------------------------------------------------- Random forest

int RandomForestModel::predict(const Row& x) const {
    long ones = 0;
    for (const Tree& t : trees) ones += t.predict(x);
    const long zeros = static_cast<long>(trees.size()) - ones;
    return ones > zeros ? 1 : 0;  // ties to class 0
}

RandomForestModel fit_random_forest(std::span<const Row> X, std::span<const int> y,
                                    std::mt19937_64& rng) {
    const std::size_t n = X.size();
    RandomForestModel model;
    model.trees.reserve(RandomForestModel::kTrees);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < RandomForestModel::kTrees; ++t) {
        std::vector<std::size_t> bootstrap(n);
        for (std::size_t& i : bootstrap) i = pick(rng);
        model.trees.push_back(grow_tree(X, y, bootstrap, RandomForestModel::kMaxDepth, rng));
    }
    return model;
}

// ----------------------------------------------------- Logistic regression

double LogisticModel::probability(const Row& x) const {
    const double z = weights[0] * x[0] + weights[1] * x[1] + bias;
    return 1.0 / (1.0 + std::exp(-z));
}

std::array<double, 3> logistic_gradient(std::span<const Row> X, std::span<const int> y,
                                        const std::array<double, 2>& weights, double bias) {
    std::array<double, 3> g{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < X.size(); ++i) {
        const double z = weights[0] * X[i][0] + weights[1] * X[i][1] + bias;
        const double p = 1.0 / (1.0 + std::exp(-z));
        const double r = static_cast<double>(y[i]) - p;
        g[0] += r * X[i][0];
        g[1] += r * X[i][1];
        g[2] += r;
    }
    return g;
}

LogisticModel fit_logistic(std::span<const Row> X, std::span<const int> y) {
    LogisticModel model;
    for (int it = 0; it < LogisticModel::kMaxIterations; ++it) {
        const auto g = logistic_gradient(X, y, model.weights, model.bias);
        const double norm = std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
        if (norm < LogisticModel::kTolerance) {
            model.converged = true;
            return model;
        }
        model.weights[0] += LogisticModel::kStep * g[0];
        model.weights[1] += LogisticModel::kStep * g[1];
        model.bias += LogisticModel::kStep * g[2];
    }
    model.converged = false;
    return model;
}

// ---------------------------------------------------------- Naive Bayes

double NaiveBayesModel::log_posterior_unnormalized(int cls, const Row& x) const {
    double lp = log_prior[cls];
    for (int f = 0; f < kNumFeatures; ++f) {
        const double var = variance[cls][f];
        const double d = x[f] - mean[cls][f];
        lp += -0.5 * std::log(2.0 * M_PI * var) - d * d / (2.0 * var);
    }
    return lp;
}

int NaiveBayesModel::predict(const Row& x) const {
    return log_posterior_unnormalized(1, x) > log_posterior_unnormalized(0, x) ? 1 : 0;
}

NaiveBayesModel fit_naive_bayes(std::span<const Row> X, std::span<const int> y) {
    NaiveBayesModel model;
    std::array<double, 2> count{0.0, 0.0};
    for (std::size_t i = 0; i < X.size(); ++i) {
        count[y[i]] += 1.0;
        for (int f = 0; f < kNumFeatures; ++f) model.mean[y[i]][f] += X[i][f];
    }
    for (int c = 0; c < 2; ++c) {
        for (int f = 0; f < kNumFeatures; ++f) model.mean[c][f] /= count[c];
        model.log_prior[c] = std::log(count[c] / static_cast<double>(X.size()));
    }
    for (std::size_t i = 0; i < X.size(); ++i) {
        for (int f = 0; f < kNumFeatures; ++f) {
            const double d = X[i][f] - model.mean[y[i]][f];
            model.variance[y[i]][f] += d * d;
        }
    }
    for (int c = 0; c < 2; ++c) {
        for (int f = 0; f < kNumFeatures; ++f) {
            model.variance[c][f] =
                std::max(model.variance[c][f] / count[c], NaiveBayesModel::kVarianceFloor);
        }
    }
    return model;
}

// ----------------------------------------------------------- train/predict

TrainedModel train(const LabeledSet& set, const ModelSpec& spec) {
    const auto counts = set.class_counts();
    if (counts[0] < 2 || counts[1] < 2) {
        throw TrainingError("need at least 2 samples per class, got " +
                            std::to_string(counts[0]) + "/" + std::to_string(counts[1]));
    }

    TrainedModel model;
    model.algorithm = spec.algorithm;
    if (counts[0] != counts[1]) {
        model.warnings.push_back("training set is imbalanced (" + std::to_string(counts[0]) +
                                 " vs " + std::to_string(counts[1]) +
                                 "); oversample before training");
    }

    std::vector<Row> X;
    X.reserve(set.size());
    for (const auto& f : set.features) X.push_back(f.values());
    const std::span<const int> y{set.labels};

    std::mt19937_64 rng(spec.rng_seed);
    switch (spec.algorithm) {
        case Algorithm::adaboost:
            model.impl = fit_adaboost(X, y);
            break;
        case Algorithm::random_forest:
            model.impl = fit_random_forest(X, y, rng);
            break;
        case Algorithm::logistic_regression: {
            auto fitted = fit_logistic(X, y);
            if (!fitted.converged) {
                model.warnings.push_back("logistic regression did not converge within " +
                                         std::to_string(LogisticModel::kMaxIterations) +
                                         " iterations");
            }
            model.impl = fitted;
            break;
        }
        case Algorithm::naive_bayes:
            model.impl = fit_naive_bayes(X, y);
            break;
    }
    return model;
}

std::vector<int> predict(const TrainedModel& model, const std::vector<FeatureVector>& features) {
    std::vector<int> out;
    out.reserve(features.size());
    for (const auto& f : features) {
        const Row x = f.values();
        out.push_back(std::visit([&](const auto& m) { return m.predict(x); }, model.impl));
    }
    return out;
}

// ----------------------------------------------------------- serialization

namespace {

constexpr const char* kMagic = "evoospec-model";
constexpr int kFormatVersion = 1;

std::string fd(double v) { return io::format_double(v); }

double rd(std::istream& is, const char* what) {
    std::string tok;
    if (!(is >> tok)) throw SchemaError(std::string("model file: missing ") + what);
    return io::parse_double(tok, what);
}

long ri(std::istream& is, const char* what) {
    std::string tok;
    if (!(is >> tok)) throw SchemaError(std::string("model file: missing ") + what);
    return io::parse_long(tok, what);
}

std::string rs(std::istream& is, const char* what) {
    std::string tok;
    if (!(is >> tok)) throw SchemaError(std::string("model file: missing ") + what);
    return tok;
}

}  // namespace

void save_model(std::ostream& os, const TrainedModel& model) {
    os << kMagic << ' ' << kFormatVersion << '\n';
    os << "algorithm " << to_string(model.algorithm) << '\n';
    os << "n_features " << kNumFeatures << '\n';
    switch (model.algorithm) {
        case Algorithm::adaboost: {
            const auto& m = std::get<AdaBoostModel>(model.impl);
            os << "stages " << m.stages.size() << '\n';
            for (const Stump& s : m.stages) {
                os << "stage " << s.feature << ' ' << fd(s.threshold) << ' ' << fd(s.p1_left)
                   << ' ' << fd(s.p1_right) << '\n';
            }
            break;
        }
        case Algorithm::random_forest: {
            const auto& m = std::get<RandomForestModel>(model.impl);
            os << "trees " << m.trees.size() << '\n';
            for (const Tree& t : m.trees) {
                os << "tree " << t.nodes.size() << '\n';
                for (const TreeNode& n : t.nodes) {
                    os << "node " << n.feature << ' ' << fd(n.threshold) << ' ' << n.left << ' '
                       << n.right << ' ' << n.leaf_class << '\n';
                }
            }
            break;
        }
        case Algorithm::logistic_regression: {
            const auto& m = std::get<LogisticModel>(model.impl);
            os << "weights " << fd(m.weights[0]) << ' ' << fd(m.weights[1]) << ' ' << fd(m.bias)
               << '\n';
            os << "converged " << (m.converged ? 1 : 0) << '\n';
            break;
        }
        case Algorithm::naive_bayes: {
            const auto& m = std::get<NaiveBayesModel>(model.impl);
            os << "log_prior " << fd(m.log_prior[0]) << ' ' << fd(m.log_prior[1]) << '\n';
            for (int c = 0; c < 2; ++c) {
                os << "class " << c;
                for (int f = 0; f < kNumFeatures; ++f) {
                    os << ' ' << fd(m.mean[c][f]) << ' ' << fd(m.variance[c][f]);
                }
                os << '\n';
            }
            break;
        }
    }
    os << "end\n";
}

TrainedModel load_model(std::istream& is) {
    if (rs(is, "magic") != kMagic) throw SchemaError("model file: bad magic");
    if (ri(is, "version") != kFormatVersion) throw SchemaError("model file: unsupported version");
    if (rs(is, "algorithm keyword") != "algorithm") throw SchemaError("model file: malformed");
    TrainedModel model;
    model.algorithm = algorithm_from_string(rs(is, "algorithm"));
    if (rs(is, "n_features keyword") != "n_features" || ri(is, "n_features") != kNumFeatures) {
        throw SchemaError("model file: unsupported feature dimensionality");
    }

    auto expect = [&](const char* kw) {
        if (rs(is, kw) != kw) throw SchemaError(std::string("model file: expected ") + kw);
    };
    auto check_feature = [](long f, bool leaf_allowed) {
        if (f >= kNumFeatures || f < (leaf_allowed ? -1 : 0)) {
            throw SchemaError("model file: feature index out of range");
        }
    };

    switch (model.algorithm) {
        case Algorithm::adaboost: {
            expect("stages");
            const long n = ri(is, "stage count");
            AdaBoostModel m;
            for (long i = 0; i < n; ++i) {
                expect("stage");
                Stump s;
                const long f = ri(is, "stage feature");
                check_feature(f, false);
                s.feature = static_cast<int>(f);
                s.threshold = rd(is, "stage threshold");
                s.p1_left = rd(is, "stage p1_left");
                s.p1_right = rd(is, "stage p1_right");
                m.stages.push_back(s);
            }
            model.impl = std::move(m);
            break;
        }
        case Algorithm::random_forest: {
            expect("trees");
            const long n = ri(is, "tree count");
            RandomForestModel m;
            for (long t = 0; t < n; ++t) {
                expect("tree");
                const long nodes = ri(is, "node count");
                Tree tree;
                for (long k = 0; k < nodes; ++k) {
                    expect("node");
                    TreeNode node;
                    const long f = ri(is, "node feature");
                    check_feature(f, true);
                    node.feature = static_cast<int>(f);
                    node.threshold = rd(is, "node threshold");
                    node.left = static_cast<int>(ri(is, "node left"));
                    node.right = static_cast<int>(ri(is, "node right"));
                    node.leaf_class = static_cast<int>(ri(is, "node class"));
                    tree.nodes.push_back(node);
                }
                m.trees.push_back(std::move(tree));
            }
            model.impl = std::move(m);
            break;
        }
        case Algorithm::logistic_regression: {
            expect("weights");
            LogisticModel m;
            m.weights[0] = rd(is, "w0");
            m.weights[1] = rd(is, "w1");
            m.bias = rd(is, "bias");
            expect("converged");
            m.converged = ri(is, "converged") != 0;
            model.impl = m;
            break;
        }
        case Algorithm::naive_bayes: {
            expect("log_prior");
            NaiveBayesModel m;
            m.log_prior[0] = rd(is, "log_prior0");
            m.log_prior[1] = rd(is, "log_prior1");
            for (int c = 0; c < 2; ++c) {
                expect("class");
                if (ri(is, "class index") != c) throw SchemaError("model file: class order");
                for (int f = 0; f < kNumFeatures; ++f) {
                    m.mean[c][f] = rd(is, "mean");
                    m.variance[c][f] = rd(is, "variance");
                }
            }
            model.impl = m;
            break;
        }
    }
    if (rs(is, "end") != "end") throw SchemaError("model file: missing end marker");
    return model;
}

}  // namespace evoo::learn

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ratcubic/dataset.hpp"

namespace ratcubic {

enum class FeatureMode { Coefficients, Invariants };

struct FeatureMatrix {
    std::size_t rows = 0;
    int cols = 0;
    std::vector<double> x;   // row-major
    std::vector<int> y;      // numeric class codes
    FeatureMode mode = FeatureMode::Coefficients;
    bool log_scaled = false; // set when a magnitude clamp was applied

    const double* row(std::size_t r) const { return x.data() + r * cols; }
};

// Coefficients mode: the 8 integer coefficients as doubles. Invariants mode:
// the 6 stored invariant coordinates as doubles (the raw xi tuple, matching
// the source experiment's feature set); if any |value| exceeds 2^53 a
// sign-preserving log1p-magnitude transform is applied to the whole column
// set and recorded in log_scaled.
FeatureMatrix featurize(const std::vector<DatasetRecord>& records, FeatureMode mode);

// w_c = N / (C * n_c) over the classes present in `labels`.
std::map<int, double> class_weights(const std::vector<int>& labels);

// Deterministic per-class proportional split; classes with a single sample
// stay in train.
std::pair<FeatureMatrix, FeatureMatrix> stratified_split(const FeatureMatrix& m,
                                                         double test_fraction,
                                                         std::uint64_t seed);

struct TreeNode {
    int feature = -1;      // -1 marks a leaf
    double threshold = 0;
    int left = -1, right = -1;
    int prediction = -1;   // argmax of the weighted class mass at the leaf
};

struct DecisionTree {
    std::vector<TreeNode> nodes;
    int predict(const double* row) const;
};

struct ForestConfig {
    int tree_count = 100;
    std::uint64_t seed = 42;
    bool bootstrap = true;
    int threads = 1;
};

// Random forest with weighted Gini impurity, sqrt(#features) candidate
// features per split, unlimited depth, minimum leaf size 1. Deterministic
// for a fixed (data, config) regardless of thread count.
class RandomForest {
public:
    void train(const FeatureMatrix& train, const ForestConfig& cfg,
               const std::map<int, double>& weights);
    int predict(const double* row) const;  // majority vote
    const std::vector<DecisionTree>& trees() const { return trees_; }

private:
    std::vector<DecisionTree> trees_;
    std::vector<int> classes_;
};

struct ClassMetrics {
    struct PerClass {
        double precision = 0, recall = 0, f1 = 0;
        std::size_t support = 0;
        bool defined = true;  // false when support or predictions are absent
    };
    std::map<int, PerClass> per_class;
    double accuracy = 0;
    double macro_precision = 0, macro_recall = 0, macro_f1 = 0;
    double weighted_precision = 0, weighted_recall = 0, weighted_f1 = 0;
    std::size_t total = 0;

    std::string render() const;    // text table mirroring the report layout
    std::string to_json() const;   // undefined entries rendered as null
};

ClassMetrics evaluate(const RandomForest& model, const FeatureMatrix& test);
ClassMetrics evaluate_predictions(const std::vector<int>& predicted,
                                  const std::vector<int>& truth);

}  // namespace ratcubic

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nepstem/pipeline.hpp"
#include "nepstem/rules.hpp"

namespace nepstem {

/// Per-class stratified split with a seeded deterministic shuffle; the same
/// seed always yields the same partition. Both halves keep corpus order.
/// Throws UnlabeledDocument and ClassTooSmall (a class with < 2 documents).
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double train_fraction,
                                       std::uint64_t seed);

// Training-side document features. Terms appearing in more than half of the
// training documents are removed; the remaining vocabulary is kept in
// lexicographic order. Feature values are tf * ln(n_train/df), or raw tf
// with tfidf_weighting off.
struct FeatureSet {
    bool stemmed = false;
    bool tfidf_weighting = true;
    std::size_t n_train = 0;
    std::vector<std::string> vocabulary;
    std::vector<std::uint64_t> doc_frequency;               // aligned with vocabulary
    std::vector<std::map<std::size_t, double>> doc_features;  // term index -> value
};

FeatureSet build_features(const Corpus& train, const RuleSet* rules,
                          bool tfidf_weighting = true);

// Multinomial naive Bayes with additive smoothing. Feature masses enter the
// sufficient statistics as-is, fractional values included.
struct NbModel {
    bool stemmed = false;
    bool tfidf_weighting = true;
    double alpha = 1.0;
    std::size_t n_train = 0;
    std::vector<std::string> classes;  // lexicographic
    std::vector<double> log_prior;
    std::vector<std::string> vocabulary;
    std::vector<std::uint64_t> doc_frequency;
    std::vector<std::vector<double>> log_likelihood;  // [class][term]
};

/// labels must align with features.doc_features. Throws NonPositiveAlpha
/// and UnlabeledDocument.
NbModel train_model(const FeatureSet& features, const std::vector<std::string>& labels,
                    double alpha = 1.0);

/// Maps tokens onto the model vocabulary; out-of-vocabulary tokens drop out.
std::map<std::size_t, double> featurize(const NbModel& model,
                                        const std::vector<std::string>& tokens);

/// argmax of log-prior plus feature-weighted log-likelihoods; ties go to the
/// lexicographically first class.
const std::string& predict(const NbModel& model,
                           const std::map<std::size_t, double>& features);

struct EvalMetrics {
    double micro_f1 = 0.0;
    std::size_t vocabulary_size = 0;
    std::vector<std::string> classes;
    std::vector<std::vector<std::uint64_t>> confusion;  // [true class][predicted]
};

/// Micro-averaged F1 from pooled per-class true/false positives and false
/// negatives. Equals accuracy for single-label multiclass confusion
/// matrices.
double micro_f1_from_confusion(const std::vector<std::vector<std::uint64_t>>& confusion);

/// Predicts every test document. Stemming mode must match the model
/// (ModeMismatch); every test label must be known to the model.
EvalMetrics evaluate_model(const NbModel& model, const Corpus& test, const RuleSet* rules);

void save_model(const NbModel& model, const std::filesystem::path& path);
NbModel load_model(const std::filesystem::path& path);

}  // namespace nepstem

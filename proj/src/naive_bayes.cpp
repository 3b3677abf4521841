#include "nepstem/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>

#include "nepstem/stemmer.hpp"

namespace nepstem {

namespace {

std::vector<std::string> class_tokens(const Document& doc, bool stemmed,
                                      const RuleSet* rules) {
    std::vector<std::string> tokens = tokenize(doc.text);
    if (stemmed) {
        return stem_tokens(tokens, *rules);
    }
    return tokens;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

[[noreturn]] void bad_model(const std::string& what) {
    throw MalformedRecord("model file: " + what);
}

}  // namespace

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double train_fraction,
                                       std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw Error("train fraction must be strictly between 0 and 1");
    }
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        const Document& doc = corpus.documents[i];
        if (!doc.has_label()) {
            throw UnlabeledDocument("document \"" + doc.id + "\" has no label");
        }
        by_class[doc.label].push_back(i);
    }

    std::vector<bool> in_train(corpus.documents.size(), false);
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    for (auto& [label, indices] : by_class) {
        if (indices.size() < 2) {
            throw ClassTooSmall("class \"" + label + "\" has fewer than 2 documents");
        }
        // Fisher-Yates with explicit draws; std::shuffle is not pinned down
        // across standard libraries.
        for (std::size_t i = indices.size() - 1; i > 0; --i) {
            std::size_t j = rng() % (i + 1);
            std::swap(indices[i], indices[j]);
        }
        auto n_train = static_cast<std::size_t>(
            std::llround(train_fraction * static_cast<double>(indices.size())));
        n_train = std::clamp<std::size_t>(n_train, 1, indices.size() - 1);
        for (std::size_t i = 0; i < n_train; ++i) {
            in_train[indices[i]] = true;
        }
    }

    std::pair<Corpus, Corpus> split;
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        (in_train[i] ? split.first : split.second).documents.push_back(corpus.documents[i]);
    }
    return split;
}

FeatureSet build_features(const Corpus& train, const RuleSet* rules, bool tfidf_weighting) {
    FeatureSet features;
    features.stemmed = rules != nullptr;
    features.tfidf_weighting = tfidf_weighting;
    features.n_train = train.documents.size();

    std::vector<std::map<std::string, std::uint64_t>> doc_tf;
    doc_tf.reserve(train.documents.size());
    std::map<std::string, std::uint64_t> df;
    for (const Document& doc : train.documents) {
        std::map<std::string, std::uint64_t> tf;
        for (const std::string& token : class_tokens(doc, features.stemmed, rules)) {
            ++tf[token];
        }
        for (const auto& [term, count] : tf) {
            ++df[term];
        }
        doc_tf.push_back(std::move(tf));
    }

    // Stopword rule: drop terms present in more than half of the training
    // documents (strictly more; exactly half stays).
    std::unordered_map<std::string, std::size_t> term_index;
    for (const auto& [term, count] : df) {
        if (count * 2 > features.n_train) continue;
        term_index.emplace(term, features.vocabulary.size());
        features.vocabulary.push_back(term);
        features.doc_frequency.push_back(count);
    }
    if (features.vocabulary.empty()) {
        throw EmptyVocabulary("no terms survive the document-frequency filter");
    }

    const double n = static_cast<double>(features.n_train);
    for (const auto& tf : doc_tf) {
        std::map<std::size_t, double> vec;
        for (const auto& [term, count] : tf) {
            auto it = term_index.find(term);
            if (it == term_index.end()) continue;
            double value = static_cast<double>(count);
            if (tfidf_weighting) {
                value *= std::log(n / static_cast<double>(features.doc_frequency[it->second]));
            }
            if (value != 0.0) {
                vec.emplace(it->second, value);
            }
        }
        features.doc_features.push_back(std::move(vec));
    }
    return features;
}

NbModel train_model(const FeatureSet& features, const std::vector<std::string>& labels,
                    double alpha) {
    if (alpha <= 0.0) {
        throw NonPositiveAlpha("smoothing constant must be positive");
    }
    if (labels.size() != features.doc_features.size()) {
        throw Error("label count does not match document count");
    }
    NbModel model;
    model.stemmed = features.stemmed;
    model.tfidf_weighting = features.tfidf_weighting;
    model.alpha = alpha;
    model.n_train = features.n_train;
    model.vocabulary = features.vocabulary;
    model.doc_frequency = features.doc_frequency;

    std::map<std::string, std::size_t> class_index;
    for (const std::string& label : labels) {
        if (label.empty()) {
            throw UnlabeledDocument("training document has no label");
        }
        class_index.emplace(label, 0);
    }
    for (auto& [label, index] : class_index) {
        index = model.classes.size();
        model.classes.push_back(label);
    }

    const std::size_t n_classes = model.classes.size();
    const std::size_t n_terms = model.vocabulary.size();
    std::vector<std::uint64_t> class_docs(n_classes, 0);
    std::vector<std::vector<double>> mass(n_classes, std::vector<double>(n_terms, 0.0));
    for (std::size_t d = 0; d < labels.size(); ++d) {
        const std::size_t c = class_index[labels[d]];
        ++class_docs[c];
        for (const auto& [term, value] : features.doc_features[d]) {
            mass[c][term] += value;
        }
    }

    model.log_prior.resize(n_classes);
    model.log_likelihood.assign(n_classes, std::vector<double>(n_terms, 0.0));
    const double v = static_cast<double>(n_terms);
    for (std::size_t c = 0; c < n_classes; ++c) {
        model.log_prior[c] = std::log(static_cast<double>(class_docs[c]) /
                                      static_cast<double>(labels.size()));
        double total_mass = 0.0;
        for (double m : mass[c]) total_mass += m;
        const double log_denominator = std::log(alpha * v + total_mass);
        for (std::size_t t = 0; t < n_terms; ++t) {
            model.log_likelihood[c][t] = std::log(alpha + mass[c][t]) - log_denominator;
        }
    }
    return model;
}

std::map<std::size_t, double> featurize(const NbModel& model,
                                        const std::vector<std::string>& tokens) {
    std::map<std::size_t, double> vec;
    const double n = static_cast<double>(model.n_train);
    for (const std::string& token : tokens) {
        auto it = std::lower_bound(model.vocabulary.begin(), model.vocabulary.end(), token);
        if (it == model.vocabulary.end() || *it != token) continue;
        vec[static_cast<std::size_t>(it - model.vocabulary.begin())] += 1.0;
    }
    if (model.tfidf_weighting) {
        for (auto& [term, value] : vec) {
            value *= std::log(n / static_cast<double>(model.doc_frequency[term]));
        }
    }
    return vec;
}

const std::string& predict(const NbModel& model,
                           const std::map<std::size_t, double>& features) {
    std::size_t best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        double score = model.log_prior[c];
        for (const auto& [term, value] : features) {
            score += value * model.log_likelihood[c][term];
        }
        if (score > best_score) {
            best_score = score;
            best = c;
        }
    }
    return model.classes[best];
}

double micro_f1_from_confusion(const std::vector<std::vector<std::uint64_t>>& confusion) {
    std::uint64_t tp = 0, fp = 0, fn = 0;
    const std::size_t n = confusion.size();
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t p = 0; p < n; ++p) {
            if (c == p) {
                tp += confusion[c][p];
            } else {
                fn += confusion[c][p];  // true class c predicted elsewhere
                fp += confusion[c][p];  // predicted p, truly another class
            }
        }
    }
    if (tp + fp == 0 || tp + fn == 0) return 0.0;
    const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    const double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

EvalMetrics evaluate_model(const NbModel& model, const Corpus& test, const RuleSet* rules) {
    if ((rules != nullptr) != model.stemmed) {
        throw ModeMismatch(model.stemmed
                               ? "model was trained stemmed; evaluation needs the same rules"
                               : "model was trained unstemmed; evaluation must not be stemmed");
    }
    EvalMetrics metrics;
    metrics.classes = model.classes;
    metrics.vocabulary_size = model.vocabulary.size();
    metrics.confusion.assign(model.classes.size(),
                             std::vector<std::uint64_t>(model.classes.size(), 0));
    for (const Document& doc : test.documents) {
        if (!doc.has_label()) {
            throw UnlabeledDocument("test document \"" + doc.id + "\" has no label");
        }
        auto it = std::find(model.classes.begin(), model.classes.end(), doc.label);
        if (it == model.classes.end()) {
            throw Error("test label \"" + doc.label + "\" unknown to the model");
        }
        const auto true_class = static_cast<std::size_t>(it - model.classes.begin());
        const std::string& predicted =
            predict(model, featurize(model, class_tokens(doc, model.stemmed, rules)));
        const auto pred_class = static_cast<std::size_t>(
            std::find(model.classes.begin(), model.classes.end(), predicted) -
            model.classes.begin());
        ++metrics.confusion[true_class][pred_class];
    }
    metrics.micro_f1 = micro_f1_from_confusion(metrics.confusion);
    return metrics;
}

void save_model(const NbModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw MissingFile("cannot write model file: " + path.string());
    }
    out << "nepstem-nb-model\t1\n";
    out << "stemmed\t" << (model.stemmed ? 1 : 0) << '\n';
    out << "features\t" << (model.tfidf_weighting ? "tfidf" : "counts") << '\n';
    out << "alpha\t" << format_double(model.alpha) << '\n';
    out << "ntrain\t" << model.n_train << '\n';
    out << "classes\t" << model.classes.size() << '\n';
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        out << "class\t" << model.classes[c] << '\t' << format_double(model.log_prior[c])
            << '\n';
    }
    out << "vocab\t" << model.vocabulary.size() << '\n';
    for (std::size_t t = 0; t < model.vocabulary.size(); ++t) {
        out << "term\t" << model.vocabulary[t] << '\t' << model.doc_frequency[t];
        for (std::size_t c = 0; c < model.classes.size(); ++c) {
            out << '\t' << format_double(model.log_likelihood[c][t]);
        }
        out << '\n';
    }
}

NbModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingFile("missing model file: " + path.string());
    }
    auto next_line = [&](const char* tag) {
        std::string line;
        if (!std::getline(in, line)) bad_model(std::string("truncated before ") + tag);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> fields = split_tabs(line);
        if (fields.empty() || fields[0] != tag) bad_model(std::string("expected ") + tag);
        return fields;
    };

    auto header = next_line("nepstem-nb-model");
    if (header.size() != 2 || header[1] != "1") bad_model("unsupported version");

    NbModel model;
    model.stemmed = next_line("stemmed").at(1) == "1";
    model.tfidf_weighting = next_line("features").at(1) == "tfidf";
    model.alpha = std::stod(next_line("alpha").at(1));
    model.n_train = std::stoull(next_line("ntrain").at(1));

    const std::size_t n_classes = std::stoull(next_line("classes").at(1));
    for (std::size_t c = 0; c < n_classes; ++c) {
        auto fields = next_line("class");
        if (fields.size() != 3) bad_model("class line needs two fields");
        model.classes.push_back(fields[1]);
        model.log_prior.push_back(std::stod(fields[2]));
    }

    const std::size_t n_terms = std::stoull(next_line("vocab").at(1));
    model.log_likelihood.assign(n_classes, std::vector<double>(n_terms, 0.0));
    for (std::size_t t = 0; t < n_terms; ++t) {
        auto fields = next_line("term");
        if (fields.size() != 3 + n_classes) bad_model("term line has wrong field count");
        model.vocabulary.push_back(fields[1]);
        model.doc_frequency.push_back(std::stoull(fields[2]));
        for (std::size_t c = 0; c < n_classes; ++c) {
            model.log_likelihood[c][t] = std::stod(fields[3 + c]);
        }
    }
    return model;
}

}  // namespace nepstem

// nepstem command line: normalize | stem | eval-paice | ir index | ir query |
// classify train | classify eval. Machine-readable TSV goes to the output
// stream; human summaries go to stderr.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nepstem/naive_bayes.hpp"
#include "nepstem/normalizer.hpp"
#include "nepstem/paice.hpp"
#include "nepstem/pipeline.hpp"
#include "nepstem/rules.hpp"
#include "nepstem/stemmer.hpp"
#include "nepstem/tfidf.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::string format_score(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string version_text(const std::string& rules_dir) {
    std::ostringstream out;
    out << "nepstem " << kVersion << "\n";
    for (const char* name : {"type1_suffixes.txt", "type2_suffixes.txt", "exceptions.txt",
                             "prefixes.txt"}) {
        std::filesystem::path path = std::filesystem::path(rules_dir) / name;
        std::ifstream in(path, std::ios::binary);
        if (!in) continue;
        std::ostringstream bytes;
        bytes << in.rdbuf();
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016" PRIx64, fnv1a64(bytes.str()));
        out << "rules " << path.string() << " fnv1a64:" << buf << "\n";
    }
    return out.str();
}

nepstem::RuleSet require_rules(const std::string& rules_dir) {
    if (!std::filesystem::is_directory(rules_dir)) {
        throw nepstem::MissingFile("rules directory not found: " + rules_dir);
    }
    return nepstem::load_rule_set(rules_dir);
}

struct OutputStream {
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file.emplace(path, std::ios::binary);
            if (!*file) {
                throw nepstem::MissingFile("cannot write output file: " + path);
            }
        }
    }
    std::ostream& get() { return file ? *file : std::cout; }
    std::optional<std::ofstream> file;
};

std::unique_ptr<std::istream> open_input(const std::string& path) {
    if (path.empty() || path == "-") return nullptr;  // stdin
    auto in = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*in) {
        throw nepstem::MissingFile("cannot read input file: " + path);
    }
    return in;
}

void for_each_word(const std::string& input_path,
                   const std::function<void(const std::string&)>& fn) {
    std::unique_ptr<std::istream> file = open_input(input_path);
    std::istream& in = file ? *file : std::cin;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fn(line);
    }
}

int run_normalize(const std::string& input_path, std::ostream& out) {
    for_each_word(input_path, [&](const std::string& word) {
        try {
            out << nepstem::normalize_word(word) << '\n';
        } catch (const nepstem::EmptyAfterNormalization&) {
            std::cerr << "discarded (empty after normalization): " << word << '\n';
        }
    });
    return 0;
}

int run_stem(const std::string& rules_dir, const std::string& input_path, bool trace,
             std::ostream& out) {
    nepstem::RuleSet rs = require_rules(rules_dir);
    for_each_word(input_path, [&](const std::string& word) {
        try {
            nepstem::StemResult result = nepstem::stem(word, rs);
            out << result.original << '\t' << result.stem << '\n';
            if (trace) {
                for (const nepstem::StemStep& step : result.trace) {
                    out << '\t' << nepstem::step_kind_name(step.kind) << '\t' << step.rule
                        << '\t' << step.before << '\t' << step.after << '\n';
                }
            }
        } catch (const nepstem::EmptyAfterNormalization&) {
            std::cerr << "discarded (empty after normalization): " << word << '\n';
        }
    });
    return 0;
}

int run_eval_paice(const std::string& rules_dir, const std::string& groups_path,
                   std::ostream& out) {
    nepstem::RuleSet rs = require_rules(rules_dir);
    nepstem::ConceptGroups cg = nepstem::load_concept_groups(groups_path);
    nepstem::PaiceReport report = nepstem::evaluate(cg, rs);
    out << "GDMT\t" << report.gdmt << '\n';
    out << "GUMT\t" << report.gumt << '\n';
    out << "GDNT\t" << report.gdnt << '\n';
    out << "GWMT\t" << report.gwmt << '\n';
    out << "UI\t" << format_score(report.ui) << '\n';
    out << "OI\t" << format_score(report.oi) << '\n';
    char summary[128];
    std::snprintf(summary, sizeof(summary), "UI = %.4g%%, OI = %.4g%% over %zu groups",
                  report.ui * 100.0, report.oi * 100.0, cg.groups.size());
    std::cerr << summary << '\n';
    return 0;
}

int run_ir_index(const std::string& corpus_path, const std::string& rules_dir,
                 const std::string& out_path) {
    nepstem::Corpus corpus = nepstem::load_corpus(corpus_path);
    std::optional<nepstem::RuleSet> rs;
    if (!rules_dir.empty()) rs = require_rules(rules_dir);
    nepstem::TfIdfIndex index = nepstem::build_index(corpus, rs ? &*rs : nullptr);
    nepstem::save_index(index, out_path);
    std::cerr << "indexed " << index.n_docs() << " documents, "
              << index.doc_frequency.size() << " terms ("
              << (index.stemmed ? "stemmed" : "unstemmed") << ")\n";
    return 0;
}

int run_ir_query(const std::string& index_path, const std::string& query_text,
                 const std::string& rules_dir, std::size_t k, std::ostream& out) {
    nepstem::TfIdfIndex index = nepstem::load_index(index_path);
    std::optional<nepstem::RuleSet> rs;
    if (!rules_dir.empty()) rs = require_rules(rules_dir);
    std::vector<nepstem::RankedResult> hits =
        nepstem::query(index, query_text, rs ? &*rs : nullptr, k);
    for (const nepstem::RankedResult& hit : hits) {
        out << hit.rank << '\t' << hit.doc_id << '\t' << format_score(hit.score) << '\n';
    }
    if (hits.empty()) {
        std::cerr << "no matching documents\n";
    }
    return 0;
}

int run_classify_train(const std::string& corpus_path, const std::string& rules_dir,
                       std::uint64_t seed, double split, double alpha, bool raw_counts,
                       const std::string& out_path) {
    nepstem::Corpus corpus = nepstem::load_corpus(corpus_path);
    std::optional<nepstem::RuleSet> rs;
    if (!rules_dir.empty()) rs = require_rules(rules_dir);
    auto [train, test] = nepstem::split_corpus(corpus, split, seed);
    nepstem::FeatureSet features =
        nepstem::build_features(train, rs ? &*rs : nullptr, !raw_counts);
    std::vector<std::string> labels;
    labels.reserve(train.documents.size());
    for (const nepstem::Document& doc : train.documents) labels.push_back(doc.label);
    nepstem::NbModel model = nepstem::train_model(features, labels, alpha);
    nepstem::save_model(model, out_path);
    std::cerr << "trained on " << train.documents.size() << " documents ("
              << test.documents.size() << " held out), vocabulary "
              << model.vocabulary.size() << ", classes " << model.classes.size() << '\n';
    return 0;
}

int run_classify_eval(const std::string& model_path, const std::string& corpus_path,
                      const std::string& rules_dir, std::ostream& out) {
    nepstem::NbModel model = nepstem::load_model(model_path);
    nepstem::Corpus corpus = nepstem::load_corpus(corpus_path);
    std::optional<nepstem::RuleSet> rs;
    if (!rules_dir.empty()) rs = require_rules(rules_dir);
    nepstem::EvalMetrics metrics = nepstem::evaluate_model(model, corpus, rs ? &*rs : nullptr);
    out << "micro_f1\t" << format_score(metrics.micro_f1) << '\n';
    out << "vocabulary_size\t" << metrics.vocabulary_size << '\n';
    out << "confusion\t" << metrics.classes.size() << '\n';
    for (std::size_t c = 0; c < metrics.classes.size(); ++c) {
        out << metrics.classes[c];
        for (std::uint64_t count : metrics.confusion[c]) {
            out << '\t' << count;
        }
        out << '\n';
    }
    std::cerr << "micro-F1 " << format_score(metrics.micro_f1) << " on "
              << corpus.documents.size() << " documents\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rule-based Nepali stemming toolkit"};
    app.require_subcommand(1);
    // Let the global -o/--output appear after a subcommand as well.
    app.fallthrough();

    std::string output_path;
    app.add_option("-o,--output", output_path, "Write machine-readable output to a file");

    std::string default_rules = "rules";

    auto* normalize_cmd = app.add_subcommand("normalize", "Normalize words, one per line");
    std::string normalize_input;
    normalize_cmd->add_option("input", normalize_input, "Word file (default: stdin)");

    auto* stem_cmd = app.add_subcommand("stem", "Stem words, one per line");
    std::string stem_input;
    std::string stem_rules = default_rules;
    bool stem_trace = false;
    stem_cmd->add_option("input", stem_input, "Word file (default: stdin)");
    stem_cmd->add_option("--rules", stem_rules, "Rule directory")->capture_default_str();
    stem_cmd->add_flag("--trace", stem_trace, "Emit pipeline trace lines");

    auto* paice_cmd = app.add_subcommand("eval-paice", "Paice evaluation over concept groups");
    std::string paice_rules = default_rules;
    std::string paice_groups;
    paice_cmd->add_option("--rules", paice_rules, "Rule directory")->capture_default_str();
    paice_cmd->add_option("--groups", paice_groups, "Concept group file")->required();

    auto* ir_cmd = app.add_subcommand("ir", "tf-idf retrieval");
    ir_cmd->require_subcommand(1);
    auto* ir_index_cmd = ir_cmd->add_subcommand("index", "Build an index from a corpus");
    std::string ir_corpus, ir_rules, ir_out;
    ir_index_cmd->add_option("--corpus", ir_corpus, "Corpus file (JSON lines)")->required();
    ir_index_cmd->add_option("--rules", ir_rules, "Rule directory (stems the index)");
    ir_index_cmd->add_option("--out", ir_out, "Index output file")->required();
    auto* ir_query_cmd = ir_cmd->add_subcommand("query", "Rank documents for a query");
    std::string irq_index, irq_query, irq_rules;
    std::size_t irq_k = 10;
    ir_query_cmd->add_option("--index", irq_index, "Index file")->required();
    ir_query_cmd->add_option("--query", irq_query, "Query text")->required();
    ir_query_cmd->add_option("--rules", irq_rules, "Rule directory (must match the index)");
    ir_query_cmd->add_option("-k,--top", irq_k, "Result count")->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "Naive Bayes topic classification");
    classify_cmd->require_subcommand(1);
    auto* train_cmd = classify_cmd->add_subcommand("train", "Split a corpus and train");
    std::string cls_corpus, cls_rules, cls_out;
    std::uint64_t cls_seed = 0;
    double cls_split = 0.7;
    double cls_alpha = 1.0;
    bool cls_raw_counts = false;
    train_cmd->add_option("--corpus", cls_corpus, "Labeled corpus file")->required();
    train_cmd->add_option("--rules", cls_rules, "Rule directory (stems the features)");
    train_cmd->add_option("--seed", cls_seed, "Split seed")->capture_default_str();
    train_cmd->add_option("--split", cls_split, "Training fraction")->capture_default_str();
    train_cmd->add_option("--alpha", cls_alpha, "Smoothing constant")->capture_default_str();
    train_cmd->add_flag("--raw-counts", cls_raw_counts,
                        "Feed raw term counts instead of tf-idf masses");
    train_cmd->add_option("--out", cls_out, "Model output file")->required();
    auto* eval_cmd = classify_cmd->add_subcommand("eval", "Evaluate a model on a corpus");
    std::string eval_model, eval_corpus, eval_rules;
    eval_cmd->add_option("--model", eval_model, "Model file")->required();
    eval_cmd->add_option("--corpus", eval_corpus, "Labeled corpus file")->required();
    eval_cmd->add_option("--rules", eval_rules, "Rule directory (must match the model)");

    app.set_version_flag("--version", [&] { return version_text(default_rules); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << "run with --help for usage" << '\n';
        return 1;
    }

    try {
        OutputStream out(output_path);
        if (*normalize_cmd) return run_normalize(normalize_input, out.get());
        if (*stem_cmd) return run_stem(stem_rules, stem_input, stem_trace, out.get());
        if (*paice_cmd) return run_eval_paice(paice_rules, paice_groups, out.get());
        if (*ir_index_cmd) return run_ir_index(ir_corpus, ir_rules, ir_out);
        if (*ir_query_cmd)
            return run_ir_query(irq_index, irq_query, irq_rules, irq_k, out.get());
        if (*train_cmd)
            return run_classify_train(cls_corpus, cls_rules, cls_seed, cls_split, cls_alpha,
                                      cls_raw_counts, cls_out);
        if (*eval_cmd) return run_classify_eval(eval_model, eval_corpus, eval_rules, out.get());
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const nepstem::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

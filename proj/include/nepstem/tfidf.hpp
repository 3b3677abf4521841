#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nepstem/pipeline.hpp"
#include "nepstem/rules.hpp"

namespace nepstem {

// Bag-of-words term statistics. `stemmed` records whether tokens were
// stemmed at build time; queries must be processed the same way.
struct TfIdfIndex {
    bool stemmed = false;
    std::vector<std::string> doc_ids;
    std::vector<std::map<std::string, std::uint64_t>> term_frequency;  // per document
    std::map<std::string, std::uint64_t> doc_frequency;

    std::size_t n_docs() const { return doc_ids.size(); }

    bool operator==(const TfIdfIndex&) const = default;
};

struct RankedResult {
    std::string doc_id;
    double score = 0.0;
    std::size_t rank = 0;  // 1-based
};

/// Tokenizes every document (stemming when `rules` is given) and counts
/// term and document frequencies. Throws EmptyCorpus.
TfIdfIndex build_index(const Corpus& corpus, const RuleSet* rules);

/// Scores score(q,d) = sum over query tokens of tf(t,d) * ln(n_docs/df(t))
/// and returns up to k results with positive score, ordered by score
/// descending then doc id ascending. `rules` must be given exactly when the
/// index was built stemmed (ModeMismatch otherwise).
std::vector<RankedResult> query(const TfIdfIndex& index, std::string_view query_text,
                                const RuleSet* rules, std::size_t k);

// Flat text persistence; format documented in the README.
void save_index(const TfIdfIndex& index, const std::filesystem::path& path);
TfIdfIndex load_index(const std::filesystem::path& path);

}  // namespace nepstem

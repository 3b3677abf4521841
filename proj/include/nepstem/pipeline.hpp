#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nepstem/rules.hpp"

namespace nepstem {

struct Document {
    std::string id;
    std::string text;
    std::string label;  // empty = unlabeled

    bool has_label() const { return !label.empty(); }
};

struct Corpus {
    std::vector<Document> documents;  // ingestion order
};

/// Splits text into maximal runs of Devanagari letters and signs. Danda,
/// double danda, Devanagari digits and abbreviation marks delimit tokens
/// just like Latin characters, ASCII digits, punctuation and whitespace.
std::vector<std::string> tokenize(std::string_view text);

/// Stems each token, dropping tokens that normalize to nothing.
std::vector<std::string> stem_tokens(const std::vector<std::string>& tokens, const RuleSet& rs);

/// Loads a corpus from a line-delimited file of JSON records with fields
/// "id", "text" and optional "label". Throws DuplicateId and
/// MalformedRecord (with the offending line number).
Corpus load_corpus(const std::filesystem::path& path);

}  // namespace nepstem

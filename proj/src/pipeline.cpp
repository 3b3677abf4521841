#include "nepstem/pipeline.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "nepstem/devanagari.hpp"
#include "nepstem/stemmer.hpp"

namespace nepstem {

namespace {

// Devanagari block minus danda (U+0964), double danda (U+0965), digits
// (U+0966..U+096F) and the abbreviation/spacing-dot signs (U+0970, U+0971).
bool is_token_char(char32_t cp) {
    if (!is_devanagari(cp)) return false;
    return cp < 0x0964 || cp > 0x0971;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::u32string cps = decode_utf8(text);
    std::string current;
    for (char32_t cp : cps) {
        if (is_token_char(cp)) {
            append_utf8(current, cp);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

std::vector<std::string> stem_tokens(const std::vector<std::string>& tokens, const RuleSet& rs) {
    std::vector<std::string> stems;
    stems.reserve(tokens.size());
    for (const std::string& token : tokens) {
        try {
            stems.push_back(stem(token, rs).stem);
        } catch (const EmptyAfterNormalization&) {
            // Token consisted solely of removed characters; discard it.
        }
    }
    return stems;
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingFile("missing corpus file: " + path.string());
    }
    Corpus corpus;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) {
            throw MalformedRecord("line " + std::to_string(line_no) + ": not a JSON object");
        }
        if (!record.contains("id") || !record["id"].is_string() ||
            !record.contains("text") || !record["text"].is_string()) {
            throw MalformedRecord("line " + std::to_string(line_no) +
                                  ": record needs string fields \"id\" and \"text\"");
        }
        Document doc;
        doc.id = record["id"].get<std::string>();
        doc.text = record["text"].get<std::string>();
        if (record.contains("label") && !record["label"].is_null()) {
            if (!record["label"].is_string()) {
                throw MalformedRecord("line " + std::to_string(line_no) +
                                      ": \"label\" must be a string");
            }
            doc.label = record["label"].get<std::string>();
            if (doc.label.find('\t') != std::string::npos ||
                doc.label.find('\n') != std::string::npos) {
                throw MalformedRecord("line " + std::to_string(line_no) +
                                      ": \"label\" must not contain tabs or newlines");
            }
        }
        if (doc.id.empty() || doc.id.find('\t') != std::string::npos ||
            doc.id.find('\n') != std::string::npos) {
            throw MalformedRecord("line " + std::to_string(line_no) +
                                  ": \"id\" must be non-empty without tabs or newlines");
        }
        if (!seen_ids.insert(doc.id).second) {
            throw DuplicateId("line " + std::to_string(line_no) + ": duplicate id \"" +
                              doc.id + "\"");
        }
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

}  // namespace nepstem

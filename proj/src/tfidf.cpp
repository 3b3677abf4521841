#include "nepstem/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nepstem {

namespace {

std::vector<std::string> index_tokens(std::string_view text, const RuleSet* rules) {
    std::vector<std::string> tokens = tokenize(text);
    if (rules != nullptr) {
        return stem_tokens(tokens, *rules);
    }
    return tokens;
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

[[noreturn]] void bad_index(const std::string& what) {
    throw MalformedRecord("index file: " + what);
}

}  // namespace

TfIdfIndex build_index(const Corpus& corpus, const RuleSet* rules) {
    if (corpus.documents.empty()) {
        throw EmptyCorpus("cannot index an empty corpus");
    }
    TfIdfIndex index;
    index.stemmed = rules != nullptr;
    index.doc_ids.reserve(corpus.documents.size());
    index.term_frequency.reserve(corpus.documents.size());
    for (const Document& doc : corpus.documents) {
        index.doc_ids.push_back(doc.id);
        std::map<std::string, std::uint64_t> tf;
        for (const std::string& term : index_tokens(doc.text, rules)) {
            ++tf[term];
        }
        for (const auto& [term, count] : tf) {
            ++index.doc_frequency[term];
        }
        index.term_frequency.push_back(std::move(tf));
    }
    return index;
}

std::vector<RankedResult> query(const TfIdfIndex& index, std::string_view query_text,
                                const RuleSet* rules, std::size_t k) {
    if ((rules != nullptr) != index.stemmed) {
        throw ModeMismatch(index.stemmed
                               ? "index was built stemmed; query needs the same rules"
                               : "index was built unstemmed; query must not be stemmed");
    }
    std::vector<std::string> terms = index_tokens(query_text, rules);

    std::vector<RankedResult> hits;
    const double n = static_cast<double>(index.n_docs());
    for (std::size_t d = 0; d < index.n_docs(); ++d) {
        double score = 0.0;
        for (const std::string& term : terms) {
            auto tf_it = index.term_frequency[d].find(term);
            if (tf_it == index.term_frequency[d].end()) continue;
            auto df_it = index.doc_frequency.find(term);
            score += static_cast<double>(tf_it->second) *
                     std::log(n / static_cast<double>(df_it->second));
        }
        if (score > 0.0) {
            hits.push_back({index.doc_ids[d], score, 0});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const RankedResult& a, const RankedResult& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.doc_id < b.doc_id;
    });
    if (hits.size() > k) hits.resize(k);
    for (std::size_t i = 0; i < hits.size(); ++i) {
        hits[i].rank = i + 1;
    }
    return hits;
}

void save_index(const TfIdfIndex& index, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw MissingFile("cannot write index file: " + path.string());
    }
    out << "nepstem-index\t1\n";
    out << "stemmed\t" << (index.stemmed ? 1 : 0) << '\n';
    out << "docs\t" << index.doc_ids.size() << '\n';
    for (const std::string& id : index.doc_ids) {
        out << "doc\t" << id << '\n';
    }
    out << "terms\t" << index.doc_frequency.size() << '\n';
    for (const auto& [term, df] : index.doc_frequency) {
        out << "term\t" << term << '\t' << df << '\n';
    }
    std::uint64_t postings = 0;
    for (const auto& tf : index.term_frequency) postings += tf.size();
    out << "postings\t" << postings << '\n';
    for (std::size_t d = 0; d < index.doc_ids.size(); ++d) {
        for (const auto& [term, tf] : index.term_frequency[d]) {
            out << "post\t" << index.doc_ids[d] << '\t' << term << '\t' << tf << '\n';
        }
    }
}

TfIdfIndex load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingFile("missing index file: " + path.string());
    }
    auto next_line = [&](const char* tag) {
        std::string line;
        if (!std::getline(in, line)) bad_index(std::string("truncated before ") + tag);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> fields = split_tabs(line);
        if (fields.empty() || fields[0] != tag) bad_index(std::string("expected ") + tag);
        return fields;
    };

    auto header = next_line("nepstem-index");
    if (header.size() != 2 || header[1] != "1") bad_index("unsupported version");

    TfIdfIndex index;
    index.stemmed = next_line("stemmed").at(1) == "1";

    const std::size_t n_docs = std::stoull(next_line("docs").at(1));
    std::map<std::string, std::size_t> doc_position;
    for (std::size_t i = 0; i < n_docs; ++i) {
        auto fields = next_line("doc");
        if (fields.size() != 2) bad_index("doc line needs one field");
        index.doc_ids.push_back(fields[1]);
        doc_position[fields[1]] = i;
    }
    index.term_frequency.resize(n_docs);

    const std::size_t n_terms = std::stoull(next_line("terms").at(1));
    for (std::size_t i = 0; i < n_terms; ++i) {
        auto fields = next_line("term");
        if (fields.size() != 3) bad_index("term line needs two fields");
        const std::uint64_t df = std::stoull(fields[2]);
        if (df < 1 || df > n_docs) bad_index("df of " + fields[1] + " out of range");
        index.doc_frequency[fields[1]] = df;
    }

    const std::uint64_t n_postings = std::stoull(next_line("postings").at(1));
    for (std::uint64_t i = 0; i < n_postings; ++i) {
        auto fields = next_line("post");
        if (fields.size() != 4) bad_index("post line needs three fields");
        auto pos = doc_position.find(fields[1]);
        if (pos == doc_position.end()) bad_index("posting for unknown doc " + fields[1]);
        index.term_frequency[pos->second][fields[2]] = std::stoull(fields[3]);
    }
    return index;
}

}  // namespace nepstem

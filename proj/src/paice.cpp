#include "nepstem/paice.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "nepstem/normalizer.hpp"
#include "nepstem/stemmer.hpp"

namespace nepstem {

std::size_t ConceptGroups::word_count() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.size();
    return n;
}

ConceptGroups load_concept_groups(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingFile("missing concept group file: " + path.string());
    }
    ConceptGroups cg;
    std::map<std::string, std::size_t> first_line_of;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream words(line);
        std::string word;
        std::vector<std::string> group;
        while (words >> word) {
            if (word[0] == '#') break;  // comment: rest of line ignored
            std::string normalized = normalize_word(word);
            auto [it, inserted] = first_line_of.emplace(normalized, line_no);
            if (!inserted) {
                throw DuplicateWord("word \"" + normalized + "\" appears on line " +
                                    std::to_string(it->second) + " and line " +
                                    std::to_string(line_no));
            }
            group.push_back(std::move(normalized));
        }
        if (!group.empty()) {
            cg.groups.push_back(std::move(group));
        }
    }
    return cg;
}

PaiceReport make_report(std::uint64_t gdmt, std::uint64_t gumt, std::uint64_t gdnt,
                        std::uint64_t gwmt) {
    PaiceReport report;
    report.gdmt = gdmt;
    report.gumt = gumt;
    report.gdnt = gdnt;
    report.gwmt = gwmt;
    report.ui = gdmt > 0 ? static_cast<double>(gumt) / static_cast<double>(gdmt) : 0.0;
    report.oi = gdnt > 0 ? static_cast<double>(gwmt) / static_cast<double>(gdnt) : 0.0;
    return report;
}

PaiceReport evaluate(const ConceptGroups& cg, const StemFn& stem_fn) {
    const std::uint64_t total_words = cg.word_count();

    std::uint64_t gdmt2 = 0;  // doubled totals; each is a sum of even terms
    std::uint64_t gumt2 = 0;
    std::uint64_t gdnt2 = 0;
    std::uint64_t gwmt2 = 0;

    // stem -> (group index -> member count), for the wrongful-merge total.
    std::map<std::string, std::map<std::size_t, std::uint64_t>> stem_groups;

    for (std::size_t gi = 0; gi < cg.groups.size(); ++gi) {
        const auto& group = cg.groups[gi];
        const std::uint64_t n = group.size();
        gdmt2 += n * (n - 1);
        gdnt2 += n * (total_words - n);

        std::map<std::string, std::uint64_t> stem_counts;
        for (const std::string& word : group) {
            std::string s = stem_fn(word);
            ++stem_counts[s];
            ++stem_groups[s][gi];
        }
        for (const auto& [s, count] : stem_counts) {
            gumt2 += count * (n - count);
        }
    }

    for (const auto& [s, partitions] : stem_groups) {
        std::uint64_t stem_group_size = 0;
        for (const auto& [gi, count] : partitions) stem_group_size += count;
        for (const auto& [gi, count] : partitions) {
            gwmt2 += count * (stem_group_size - count);
        }
    }

    return make_report(gdmt2 / 2, gumt2 / 2, gdnt2 / 2, gwmt2 / 2);
}

PaiceReport evaluate(const ConceptGroups& cg, const RuleSet& rs) {
    return evaluate(cg, [&rs](const std::string& word) { return stem(word, rs).stem; });
}

PaiceReport pairwise_oracle(const ConceptGroups& cg, const StemFn& stem_fn) {
    struct Entry {
        std::size_t concept_index;
        std::string stem;
    };
    std::vector<Entry> words;
    for (std::size_t gi = 0; gi < cg.groups.size(); ++gi) {
        for (const std::string& word : cg.groups[gi]) {
            words.push_back({gi, stem_fn(word)});
        }
    }

    std::uint64_t gdmt = 0, gumt = 0, gdnt = 0, gwmt = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const bool same_concept = words[i].concept_index == words[j].concept_index;
            const bool same_stem = words[i].stem == words[j].stem;
            if (same_concept) {
                ++gdmt;
                if (!same_stem) ++gumt;
            } else {
                ++gdnt;
                if (same_stem) ++gwmt;
            }
        }
    }
    return make_report(gdmt, gumt, gdnt, gwmt);
}

}  // namespace nepstem

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "nepstem/rules.hpp"

namespace nepstem {

// A partition of a word list into semantic concepts. Words are globally
// unique; groups of one word are legal but contribute nothing to the merge
// totals.
struct ConceptGroups {
    std::vector<std::vector<std::string>> groups;

    std::size_t word_count() const;
};

struct PaiceReport {
    std::uint64_t gdmt = 0;  // desired merges: same-concept pairs
    std::uint64_t gumt = 0;  // unachieved merges: same-concept pairs, different stems
    std::uint64_t gdnt = 0;  // desired non-merges: different-concept pairs
    std::uint64_t gwmt = 0;  // wrongful merges: different-concept pairs, same stem
    double ui = 0.0;         // gumt / gdmt (0 when gdmt = 0)
    double oi = 0.0;         // gwmt / gdnt (0 when gdnt = 0)
};

using StemFn = std::function<std::string(const std::string&)>;

/// One group per line, words whitespace-separated, `#` comment lines.
/// Words are normalized on load; global uniqueness is enforced afterwards
/// (DuplicateWord names the word and both lines). Blank lines are ignored.
ConceptGroups load_concept_groups(const std::filesystem::path& path);

/// Fills in ui/oi from the four totals.
PaiceReport make_report(std::uint64_t gdmt, std::uint64_t gumt, std::uint64_t gdnt,
                        std::uint64_t gwmt);

/// Group-tally route: per-group stem counts feed the closed-form merge
/// totals. With W words in all, GDMT + GDNT = W(W-1)/2.
PaiceReport evaluate(const ConceptGroups& cg, const StemFn& stem_fn);
PaiceReport evaluate(const ConceptGroups& cg, const RuleSet& rs);

/// Brute-force route: classifies every unordered word pair directly.
/// Quadratic in the word count; exists to check `evaluate` exactly.
PaiceReport pairwise_oracle(const ConceptGroups& cg, const StemFn& stem_fn);

}  // namespace nepstem

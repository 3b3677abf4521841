#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nepstem/errors.hpp"

namespace nepstem {

// The stemmer's entire configuration. All stored strings are normalized, so
// matching against normalized words is plain string suffix/prefix matching.
struct RuleSet {
    std::set<std::string> type1_suffixes;  // postpositions and agglutinative suffixes
    std::set<std::string> type2_suffixes;  // case markers and bound suffixes
    std::set<std::string> exceptions;      // words never stripped
    std::set<std::string> prefixes;        // default {न}

    // First-letter vowel-sign rewrite applied to words ending in इक/िक:
    // ा is removed, ौ becomes ु, ै becomes ि.
    std::map<char32_t, std::optional<char32_t>> ik_transform = {
        {0x093E, std::nullopt},  // ा → removed
        {0x094C, 0x0941},        // ौ → ु
        {0x0948, 0x093F},        // ै → ि
    };

    int min_stem_letters = 2;

    bool operator==(const RuleSet&) const = default;
};

/// Loads type1_suffixes.txt, type2_suffixes.txt, exceptions.txt and
/// prefixes.txt from `rules_directory`. Files are UTF-8, one entry per line;
/// lines starting with `#` and blank lines are ignored. Entries are
/// normalized on load and duplicates merge silently.
/// Throws MissingFile and MalformedEntry (whitespace inside an entry, entry
/// vanishing under normalization, or a suffix equal to an exception word).
RuleSet load_rule_set(const std::filesystem::path& rules_directory);

/// Writes the four rule files back out, one normalized entry per line in
/// set order. Reloading yields an equal RuleSet.
void save_rule_set(const RuleSet& rs, const std::filesystem::path& rules_directory);

/// Non-fatal curation diagnostics: suffixes longer than 6 letters, exception
/// words ending in no known suffix (dead entries), prefixes that are not a
/// single letter.
std::vector<std::string> validate_rule_set(const RuleSet& rs);

}  // namespace nepstem

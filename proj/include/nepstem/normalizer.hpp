#pragma once

#include <array>
#include <string>
#include <string_view>

#include "nepstem/errors.hpp"

namespace nepstem {

// One row of the character normalization table. `remove` means all
// occurrences of `source` are dropped.
struct NormalizationRule {
    char32_t source;
    char32_t replacement;
    bool remove;
};

// The eight normalization rows: ई→इ, ी→ि, ऊ→उ, ू→ु, व→ब, श→स, ष→स and
// removal of ँ. No replacement appears as a source, so a single pass is a
// fixed point.
const std::array<NormalizationRule, 8>& normalization_table();

/// Applies the normalization table to every code point of `raw`.
/// Surrounding ASCII whitespace is stripped first; non-Devanagari code
/// points pass through unchanged. Throws EmptyAfterNormalization when
/// nothing is left (input was whitespace or consisted solely of removed
/// characters).
std::string normalize_word(std::string_view raw);

}  // namespace nepstem

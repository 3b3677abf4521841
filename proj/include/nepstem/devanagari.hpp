#pragma once

#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 codec and Devanagari character classification. Everything in
// the toolkit operates on code points; grapheme clustering is never needed
// because all rules are per-code-point.

namespace nepstem {

// Decodes UTF-8 into code points. Invalid byte sequences decode as U+FFFD,
// one replacement per offending byte, so decoding is total.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view codepoints);

void append_utf8(std::string& out, char32_t cp);

std::size_t codepoint_count(std::string_view text);

inline bool is_devanagari(char32_t cp) {
    return cp >= 0x0900 && cp <= 0x097F;
}

// Consonants क..ह, nukta consonants क़..य़, independent vowels अ..औ.
inline bool is_base_letter(char32_t cp) {
    return (cp >= 0x0915 && cp <= 0x0939) || (cp >= 0x0958 && cp <= 0x095F) ||
           (cp >= 0x0905 && cp <= 0x0914);
}

inline bool is_dependent_vowel_sign(char32_t cp) {
    return (cp >= 0x093E && cp <= 0x094C) || cp == 0x093A || cp == 0x093B ||
           cp == 0x094E || cp == 0x094F || (cp >= 0x0955 && cp <= 0x0957) ||
           cp == 0x0962 || cp == 0x0963;
}

inline bool is_virama(char32_t cp) {
    return cp == 0x094D;
}

// Number of base letters in a word. Dependent vowel signs, virama, anusvara
// and candrabindu do not count; this is the length used by the stripping
// threshold.
int letter_length(std::u32string_view codepoints);
int letter_length(std::string_view word);

}  // namespace nepstem

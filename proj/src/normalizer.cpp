#include "nepstem/normalizer.hpp"

#include "nepstem/devanagari.hpp"

namespace nepstem {

const std::array<NormalizationRule, 8>& normalization_table() {
    static const std::array<NormalizationRule, 8> table = {{
        {0x0908, 0x0907, false},  // ई → इ
        {0x0940, 0x093F, false},  // ी → ि
        {0x090A, 0x0909, false},  // ऊ → उ
        {0x0942, 0x0941, false},  // ू → ु
        {0x0935, 0x092C, false},  // व → ब
        {0x0936, 0x0938, false},  // श → स
        {0x0937, 0x0938, false},  // ष → स
        {0x0901, 0, true},        // ँ removed
    }};
    return table;
}

std::string normalize_word(std::string_view raw) {
    std::size_t begin = 0;
    std::size_t end = raw.size();
    auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    };
    while (begin < end && is_space(raw[begin])) ++begin;
    while (end > begin && is_space(raw[end - 1])) --end;

    std::u32string cps = decode_utf8(raw.substr(begin, end - begin));
    std::u32string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        bool removed = false;
        for (const NormalizationRule& rule : normalization_table()) {
            if (cp == rule.source) {
                if (rule.remove) {
                    removed = true;
                } else {
                    cp = rule.replacement;
                }
                break;
            }
        }
        if (!removed) {
            out.push_back(cp);
        }
    }
    if (out.empty()) {
        throw EmptyAfterNormalization("word is empty after normalization: \"" +
                                      std::string(raw) + "\"");
    }
    return encode_utf8(out);
}

}  // namespace nepstem

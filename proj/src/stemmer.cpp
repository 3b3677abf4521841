#include "nepstem/stemmer.hpp"

#include <algorithm>

#include "nepstem/devanagari.hpp"
#include "nepstem/normalizer.hpp"

namespace nepstem {

namespace {

bool ends_with(const std::string& word, const std::string& suffix) {
    return word.size() >= suffix.size() &&
           word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(const std::string& word, const std::string& prefix) {
    return word.size() >= prefix.size() && word.compare(0, prefix.size(), prefix) == 0;
}

// Matching suffixes ordered longest first. Two distinct suffixes of equal
// code-point length cannot both match the same word end, so the order is
// total.
std::vector<const std::string*> matching_suffixes(const std::string& word,
                                                  const std::set<std::string>& suffixes) {
    std::vector<const std::string*> matches;
    for (const std::string& s : suffixes) {
        if (!s.empty() && ends_with(word, s)) {
            matches.push_back(&s);
        }
    }
    std::sort(matches.begin(), matches.end(), [](const std::string* a, const std::string* b) {
        return codepoint_count(*a) > codepoint_count(*b);
    });
    return matches;
}

std::string strip_suffix_loop(std::string word, const RuleSet& rs,
                              const std::set<std::string>& suffixes, StepKind strip_kind,
                              bool exception_gate, std::vector<StemStep>& trace) {
    for (;;) {
        if (exception_gate && rs.exceptions.count(word)) {
            trace.push_back({StepKind::ExceptionStop, "", word, word});
            break;
        }
        bool stripped = false;
        for (const std::string* s : matching_suffixes(word, suffixes)) {
            std::string remainder = word.substr(0, word.size() - s->size());
            if (letter_length(remainder) >= rs.min_stem_letters) {
                trace.push_back({strip_kind, *s, word, remainder});
                word = std::move(remainder);
                stripped = true;
                break;
            }
            trace.push_back({StepKind::ThresholdReject, *s, word, word});
        }
        if (!stripped) break;
    }
    return word;
}

}  // namespace

std::string_view step_kind_name(StepKind kind) {
    switch (kind) {
        case StepKind::Normalize: return "normalize";
        case StepKind::ExceptionStop: return "exception-stop";
        case StepKind::StripType1: return "strip-type1";
        case StepKind::StripPrefix: return "strip-prefix";
        case StepKind::IkTransform: return "ik-transform";
        case StepKind::StripType2: return "strip-type2";
        case StepKind::ThresholdReject: return "threshold-reject";
    }
    return "unknown";
}

std::string strip_type1(std::string word, const RuleSet& rs, std::vector<StemStep>& trace) {
    return strip_suffix_loop(std::move(word), rs, rs.type1_suffixes, StepKind::StripType1,
                             /*exception_gate=*/true, trace);
}

std::string strip_type2(std::string word, const RuleSet& rs, std::vector<StemStep>& trace) {
    return strip_suffix_loop(std::move(word), rs, rs.type2_suffixes, StepKind::StripType2,
                             /*exception_gate=*/false, trace);
}

std::string strip_prefix(std::string word, const RuleSet& rs, std::vector<StemStep>& trace) {
    if (rs.exceptions.count(word)) return word;
    for (const std::string& p : rs.prefixes) {
        if (p.empty() || !starts_with(word, p)) continue;
        // The prefix must stand as a bare letter: not fused to the rest of
        // the word by a vowel sign or virama (नेपाल keeps its न).
        std::u32string rest = decode_utf8(std::string_view(word).substr(p.size()));
        if (!rest.empty() && (is_dependent_vowel_sign(rest[0]) || is_virama(rest[0]))) {
            continue;
        }
        std::string remainder = word.substr(p.size());
        if (letter_length(rest) >= rs.min_stem_letters) {
            trace.push_back({StepKind::StripPrefix, p, word, remainder});
            return remainder;
        }
        trace.push_back({StepKind::ThresholdReject, p, word, word});
    }
    return word;
}

std::string apply_ik_transform(std::string word, const RuleSet& rs,
                               std::vector<StemStep>& trace) {
    std::u32string cps = decode_utf8(word);
    if (cps.size() < 2) return word;
    bool ik_ending = cps[cps.size() - 1] == 0x0915 &&
                     (cps[cps.size() - 2] == 0x0907 || cps[cps.size() - 2] == 0x093F);
    if (!ik_ending) return word;

    // Rewrite the vowel sign attached to the first letter.
    for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
        if (!is_base_letter(cps[i])) continue;
        auto it = rs.ik_transform.find(cps[i + 1]);
        if (it == rs.ik_transform.end()) return word;
        std::string rule;
        append_utf8(rule, it->first);
        rule += "\xE2\x86\x92";  // →
        std::u32string transformed = cps;
        if (it->second.has_value()) {
            append_utf8(rule, *it->second);
            transformed[i + 1] = *it->second;
        } else {
            transformed.erase(i + 1, 1);
        }
        std::string after = encode_utf8(transformed);
        trace.push_back({StepKind::IkTransform, rule, word, after});
        return after;
    }
    return word;
}

StemResult stem(std::string_view word, const RuleSet& rs) {
    StemResult result;
    result.original = std::string(word);
    result.normalized = normalize_word(word);
    if (result.normalized != result.original) {
        result.trace.push_back(
            {StepKind::Normalize, "", result.original, result.normalized});
    }
    if (rs.exceptions.count(result.normalized)) {
        result.trace.push_back(
            {StepKind::ExceptionStop, "", result.normalized, result.normalized});
        result.stem = result.normalized;
        return result;
    }
    // Repeat the stage sequence until nothing changes: an inner strip can
    // expose outer-layer material again (degenerate inputs only), and a stem
    // must contain no further strippable material. Passes that change
    // nothing contribute no trace steps.
    std::string w = result.normalized;
    for (;;) {
        std::vector<StemStep> pass;
        const std::string before = w;
        w = strip_type1(std::move(w), rs, pass);
        w = strip_prefix(std::move(w), rs, pass);
        w = apply_ik_transform(std::move(w), rs, pass);
        w = strip_type2(std::move(w), rs, pass);
        if (w == before) break;
        result.trace.insert(result.trace.end(), pass.begin(), pass.end());
    }
    result.stem = std::move(w);
    return result;
}

}  // namespace nepstem

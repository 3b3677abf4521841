#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nepstem/rules.hpp"

namespace nepstem {

enum class StepKind {
    Normalize,
    ExceptionStop,
    StripType1,
    StripPrefix,
    IkTransform,
    StripType2,
    ThresholdReject,
};

std::string_view step_kind_name(StepKind kind);

// One pipeline event. ThresholdReject records a rule that was NOT applied,
// so before == after for those steps.
struct StemStep {
    StepKind kind;
    std::string rule;
    std::string before;
    std::string after;

    bool operator==(const StemStep&) const = default;
};

struct StemResult {
    std::string original;
    std::string normalized;
    std::string stem;
    std::vector<StemStep> trace;
};

/// The full stemming pipeline: normalize, exception gate, then the stage
/// sequence type I suffix loop / prefix strip / ik transform / type II
/// suffix loop, repeated until a fixed point so the result has no further
/// strippable material. Deterministic for a given word and RuleSet. Throws
/// EmptyAfterNormalization for words that normalize to nothing.
StemResult stem(std::string_view word, const RuleSet& rs);

// Pipeline stages over an already-normalized word. Each returns the new
// word and appends its steps to `trace`.

/// Repeatedly strips the longest type I suffix whose removal keeps at least
/// min_stem_letters letters, stopping as soon as the word is an exception.
std::string strip_type1(std::string word, const RuleSet& rs, std::vector<StemStep>& trace);

/// Strips a prefix at most once. The prefix letter must be bare (not carrying
/// a dependent vowel sign or virama), the word must not be an exception, and
/// the remainder must keep min_stem_letters letters.
std::string strip_prefix(std::string word, const RuleSet& rs, std::vector<StemStep>& trace);

/// For words ending in इक or िक, rewrites the vowel sign attached to the
/// first letter (ा removed, ौ→ु, ै→ि). The result may be an intermediate
/// form that is not itself a word.
std::string apply_ik_transform(std::string word, const RuleSet& rs, std::vector<StemStep>& trace);

/// Repeatedly strips the longest type II suffix under the same length
/// threshold. No exception gate.
std::string strip_type2(std::string word, const RuleSet& rs, std::vector<StemStep>& trace);

}  // namespace nepstem

#pragma once

// Shared test utilities: random Devanagari words, trace replay, scratch
// directories.

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "nepstem/devanagari.hpp"
#include "nepstem/stemmer.hpp"

namespace test_util {

// Letters, vowel signs, virama and the characters the normalizer rewrites,
// so random words exercise every table row.
inline const std::u32string& devanagari_pool() {
    static const std::u32string pool = [] {
        std::u32string p;
        for (char32_t cp = 0x0905; cp <= 0x0914; ++cp) p.push_back(cp);  // अ..औ
        for (char32_t cp = 0x0915; cp <= 0x0939; ++cp) p.push_back(cp);  // क..ह
        for (char32_t cp = 0x093E; cp <= 0x094C; ++cp) p.push_back(cp);  // matras
        p.push_back(0x094D);  // virama
        p.push_back(0x0901);  // candrabindu (removed by normalization)
        p.push_back(0x0902);  // anusvara
        p.push_back(0x0908);  // ई
        p.push_back(0x0940);  // ी
        p.push_back(0x090A);  // ऊ
        p.push_back(0x0942);  // ू
        return p;
    }();
    return pool;
}

inline std::string random_devanagari_word(std::mt19937& rng, std::size_t max_len = 12) {
    const std::u32string& pool = devanagari_pool();
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::u32string cps;
    const std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) {
        cps.push_back(pool[pick(rng)]);
    }
    return nepstem::encode_utf8(cps);
}

// Replays the mutating trace steps from the normalized form; true when the
// chain is consistent and lands on the stem.
inline bool replay_trace(const nepstem::StemResult& result) {
    std::string current = result.normalized;
    for (const nepstem::StemStep& step : result.trace) {
        switch (step.kind) {
            case nepstem::StepKind::StripType1:
            case nepstem::StepKind::StripPrefix:
            case nepstem::StepKind::IkTransform:
            case nepstem::StepKind::StripType2:
                if (step.before != current) return false;
                current = step.after;
                break;
            case nepstem::StepKind::Normalize:
            case nepstem::StepKind::ExceptionStop:
            case nepstem::StepKind::ThresholdReject:
                if (step.kind != nepstem::StepKind::Normalize && step.before != step.after) {
                    return false;
                }
                break;
        }
    }
    return current == result.stem;
}

// Self-deleting scratch directory.
struct ScratchDir {
    std::filesystem::path path;

    explicit ScratchDir(const std::string& name) {
        path = std::filesystem::temp_directory_path() / ("nepstem_test_" + name);
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~ScratchDir() { std::filesystem::remove_all(path); }

    std::filesystem::path file(const std::string& name, const std::string& content) const {
        std::filesystem::path p = path / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }
};

inline std::filesystem::path source_dir() {
    return std::filesystem::path(NEPSTEM_SOURCE_DIR);
}

inline std::filesystem::path shipped_rules_dir() {
    return source_dir() / "rules";
}

}  // namespace test_util

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nepstem/normalizer.hpp"
#include "nepstem/rules.hpp"

using namespace nepstem;

namespace {

void write_default_files(const test_util::ScratchDir& dir) {
    dir.file("type1_suffixes.txt", "हरु\nको\nलाई\n");
    dir.file("type2_suffixes.txt", "िक\nनु\n");
    dir.file("exceptions.txt", "नेहरु\n");
    dir.file("prefixes.txt", "न\n");
}

}  // namespace

TEST_CASE("load_rule_set reads and normalizes entries") {
    test_util::ScratchDir dir("rules_load");
    write_default_files(dir);

    RuleSet rs = load_rule_set(dir.path);
    CHECK(rs.type1_suffixes == std::set<std::string>{"हरु", "को", "लाइ"});  // लाई normalized
    CHECK(rs.type2_suffixes == std::set<std::string>{"िक", "नु"});
    CHECK(rs.exceptions == std::set<std::string>{"नेहरु"});
    CHECK(rs.prefixes == std::set<std::string>{"न"});
    CHECK(rs.min_stem_letters == 2);
}

TEST_CASE("normalization merges duplicate entries") {
    test_util::ScratchDir dir("rules_merge");
    write_default_files(dir);
    dir.file("type2_suffixes.txt", "िक\nीक\n");  // ीक normalizes to िक

    RuleSet rs = load_rule_set(dir.path);
    CHECK(rs.type2_suffixes == std::set<std::string>{"िक"});
}

TEST_CASE("CRLF line endings are accepted") {
    test_util::ScratchDir dir("rules_crlf");
    write_default_files(dir);
    dir.file("type1_suffixes.txt", "हरु\r\nको\r\n");

    RuleSet rs = load_rule_set(dir.path);
    CHECK(rs.type1_suffixes == std::set<std::string>{"हरु", "को"});
}

TEST_CASE("empty rule file is an empty set") {
    test_util::ScratchDir dir("rules_empty");
    write_default_files(dir);
    dir.file("exceptions.txt", "# nothing here\n\n");

    RuleSet rs = load_rule_set(dir.path);
    CHECK(rs.exceptions.empty());
}

TEST_CASE("load errors") {
    test_util::ScratchDir dir("rules_errors");
    write_default_files(dir);

    SUBCASE("missing file") {
        std::filesystem::remove(dir.path / "prefixes.txt");
        CHECK_THROWS_AS(load_rule_set(dir.path), MissingFile);
    }
    SUBCASE("entry with inner whitespace") {
        dir.file("type1_suffixes.txt", "हरु को\n");
        CHECK_THROWS_AS(load_rule_set(dir.path), MalformedEntry);
    }
    SUBCASE("entry vanishing under normalization") {
        dir.file("type1_suffixes.txt", "ँ\n");
        CHECK_THROWS_AS(load_rule_set(dir.path), MalformedEntry);
    }
    SUBCASE("suffix equal to an exception word") {
        dir.file("type1_suffixes.txt", "नेहरु\n");
        CHECK_THROWS_AS(load_rule_set(dir.path), MalformedEntry);
    }
}

TEST_CASE("loading is independent of line order and round-trips") {
    test_util::ScratchDir a("rules_order_a");
    test_util::ScratchDir b("rules_order_b");
    write_default_files(a);
    write_default_files(b);
    b.file("type1_suffixes.txt", "लाई\nहरु\n# comment\nको\n");

    RuleSet rs_a = load_rule_set(a.path);
    RuleSet rs_b = load_rule_set(b.path);
    CHECK(rs_a == rs_b);

    test_util::ScratchDir out("rules_roundtrip");
    save_rule_set(rs_a, out.path);
    CHECK(load_rule_set(out.path) == rs_a);
}

TEST_CASE("validate_rule_set diagnostics") {
    test_util::ScratchDir dir("rules_validate");
    write_default_files(dir);
    RuleSet rs = load_rule_set(dir.path);

    SUBCASE("exception covered by a suffix gives no warning") {
        CHECK(validate_rule_set(rs).empty());
    }
    SUBCASE("dead exception entry") {
        rs.exceptions.insert("कलम");  // ends in no known suffix
        auto diagnostics = validate_rule_set(rs);
        REQUIRE(diagnostics.size() == 1);
        CHECK(diagnostics[0].find("कलम") != std::string::npos);
        CHECK(diagnostics[0].find("dead entry") != std::string::npos);
    }
    SUBCASE("overlong suffix") {
        rs.type1_suffixes.insert("कखगघङचछ");  // 7 letters
        auto diagnostics = validate_rule_set(rs);
        REQUIRE(diagnostics.size() == 1);
        CHECK(diagnostics[0].find("longer than 6 letters") != std::string::npos);
    }
    SUBCASE("multi-letter prefix") {
        rs.prefixes.insert("उप");
        auto diagnostics = validate_rule_set(rs);
        REQUIRE(diagnostics.size() == 1);
        CHECK(diagnostics[0].find("not a single letter") != std::string::npos);
    }
}

TEST_CASE("shipped rule files load cleanly and validate without diagnostics") {
    RuleSet rs = load_rule_set(test_util::shipped_rules_dir());
    CHECK(rs.type1_suffixes.count("हरु") == 1);
    CHECK(rs.type1_suffixes.count("को") == 1);
    CHECK(rs.type2_suffixes.count("िक") == 1);
    CHECK(rs.exceptions.count("काले") == 1);
    CHECK(rs.exceptions.count("नेहरु") == 1);
    CHECK(rs.prefixes == std::set<std::string>{"न"});

    // Every stored entry is a fixed point of normalization.
    for (const auto* set : {&rs.type1_suffixes, &rs.type2_suffixes, &rs.exceptions,
                            &rs.prefixes}) {
        for (const std::string& entry : *set) {
            CHECK(normalize_word(entry) == entry);
        }
    }

    auto diagnostics = validate_rule_set(rs);
    for (const std::string& d : diagnostics) {
        INFO(d);
        CHECK(false);
    }
    CHECK(diagnostics.empty());
}

#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "nepstem/pipeline.hpp"
#include "nepstem/rules.hpp"

using namespace nepstem;

TEST_CASE("tokenize examples") {
    CHECK(tokenize("साझा बस") == std::vector<std::string>{"साझा", "बस"});
    CHECK(tokenize("abc 123") == std::vector<std::string>{});
    CHECK(tokenize("") == std::vector<std::string>{});
    // Punctuation delimits, including danda and Devanagari digits.
    CHECK(tokenize("कतार, राजदुत।") == std::vector<std::string>{"कतार", "राजदुत"});
    CHECK(tokenize("वर्ष २०७९ मा") == std::vector<std::string>{"वर्ष", "मा"});
    CHECK(tokenize("नेपाल(अधिराज्य)") == std::vector<std::string>{"नेपाल", "अधिराज्य"});
}

TEST_CASE("tokenize delimiter closure") {
    const std::string pieces[] = {"साझा बस", "कतार, राजदुत।", "abc", "घर1मा"};
    for (const std::string& a : pieces) {
        for (const std::string& b : pieces) {
            std::vector<std::string> joined = tokenize(a + " " + b);
            std::vector<std::string> separate = tokenize(a);
            for (const std::string& t : tokenize(b)) separate.push_back(t);
            CHECK(joined == separate);
        }
    }
}

TEST_CASE("stem_tokens") {
    RuleSet rs = load_rule_set(test_util::shipped_rules_dir());
    CHECK(stem_tokens({"मानिसहरुको"}, rs) == std::vector<std::string>{"मानिस"});
    CHECK(stem_tokens({}, rs) == std::vector<std::string>{});
    CHECK(stem_tokens({"नेहरु", "कलम"}, rs) == std::vector<std::string>{"नेहरु", "कलम"});
    // Tokens that normalize to nothing fall out.
    CHECK(stem_tokens({"ँ", "घर"}, rs) == std::vector<std::string>{"घर"});
}

TEST_CASE("load_corpus") {
    test_util::ScratchDir dir("corpus");

    SUBCASE("preserves order") {
        auto path = dir.file("c.jsonl",
                             "{\"id\":\"d1\",\"text\":\"घर\"}\n"
                             "{\"id\":\"d2\",\"text\":\"बस\",\"label\":\"travel\"}\n");
        Corpus c = load_corpus(path);
        REQUIRE(c.documents.size() == 2);
        CHECK(c.documents[0].id == "d1");
        CHECK_FALSE(c.documents[0].has_label());
        CHECK(c.documents[1].label == "travel");
    }
    SUBCASE("duplicate id") {
        auto path = dir.file("dup.jsonl",
                             "{\"id\":\"d1\",\"text\":\"क\"}\n"
                             "{\"id\":\"d1\",\"text\":\"ख\"}\n");
        CHECK_THROWS_AS(load_corpus(path), DuplicateId);
    }
    SUBCASE("malformed record reports the line") {
        auto path = dir.file("bad.jsonl",
                             "{\"id\":\"d1\",\"text\":\"क\"}\n"
                             "not json\n");
        try {
            load_corpus(path);
            CHECK(false);
        } catch (const MalformedRecord& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("missing text field") {
        auto path = dir.file("missing.jsonl", "{\"id\":\"d1\"}\n");
        CHECK_THROWS_AS(load_corpus(path), MalformedRecord);
    }
    SUBCASE("id and label reject tabs") {
        auto path = dir.file("tabid.jsonl", "{\"id\":\"a\\tb\",\"text\":\"क\"}\n");
        CHECK_THROWS_AS(load_corpus(path), MalformedRecord);
        auto path2 = dir.file("tablabel.jsonl",
                              "{\"id\":\"a\",\"text\":\"क\",\"label\":\"x\\ty\"}\n");
        CHECK_THROWS_AS(load_corpus(path2), MalformedRecord);
    }
    SUBCASE("balanced labeled corpus at scale") {
        std::ostringstream content;
        const char* labels[] = {"c1", "c2", "c3", "c4", "c5", "c6", "c7"};
        for (int i = 0; i < 1400; ++i) {
            content << "{\"id\":\"d" << i << "\",\"text\":\"घर बस\",\"label\":\""
                    << labels[i % 7] << "\"}\n";
        }
        auto path = dir.file("big.jsonl", content.str());
        Corpus c = load_corpus(path);
        CHECK(c.documents.size() == 1400);
    }
}

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "helpers.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing stdout.
CommandResult run(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string cli() {
    return std::string(NEPSTEM_CLI_PATH);
}

std::string rules_arg() {
    return " --rules " + (test_util::source_dir() / "rules").string();
}

}  // namespace

TEST_CASE("cli stem") {
    CommandResult r = run("printf 'कालेले\\n' | " + cli() + " stem" + rules_arg());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "कालेले\tकाले\n");
}

TEST_CASE("cli stem with trace") {
    CommandResult r =
        run("printf 'नजानु\\n' | " + cli() + " stem --trace" + rules_arg());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("नजानु\tजानु\n") == 0);
    CHECK(r.output.find("\tstrip-prefix\t") != std::string::npos);
    CHECK(r.output.find("\tthreshold-reject\t") != std::string::npos);
}

TEST_CASE("cli normalize") {
    CommandResult r = run("printf 'साङ्केतीक\\n' | " + cli() + " normalize");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "साङ्केतिक\n");
}

TEST_CASE("cli without arguments prints usage and exits 1") {
    CommandResult r = run(cli() + " 2>/dev/null");
    CHECK(r.exit_code == 1);
}

TEST_CASE("cli unknown subcommand exits 1") {
    CommandResult r = run(cli() + " frobnicate 2>/dev/null");
    CHECK(r.exit_code == 1);
}

TEST_CASE("cli data error exits 2") {
    CommandResult r = run(cli() + " stem --rules /nonexistent </dev/null 2>/dev/null");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli version") {
    CommandResult r = run(cli() + " --version");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("nepstem") != std::string::npos);
}

TEST_CASE("cli output redirection") {
    test_util::ScratchDir dir("cli_output");
    auto out = dir.path / "stems.tsv";
    CommandResult r = run("printf 'मानिसहरुको\\n' | " + cli() + " -o " + out.string() +
                          " stem" + rules_arg());
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream f(out);
    std::string line;
    REQUIRE(std::getline(f, line));
    CHECK(line == "मानिसहरुको\tमानिस");

    // -o is also accepted after the subcommand.
    auto out2 = dir.path / "stems2.tsv";
    r = run("printf 'मानिसहरुको\\n' | " + cli() + " stem" + rules_arg() + " -o " +
            out2.string());
    CHECK(r.exit_code == 0);
    std::ifstream f2(out2);
    REQUIRE(std::getline(f2, line));
    CHECK(line == "मानिसहरुको\tमानिस");
}

TEST_CASE("cli eval-paice emits the fixed report and is reproducible") {
    test_util::ScratchDir dir("cli_paice");
    auto groups = dir.file("groups.txt",
                           "मानिस मानिसको मानिसहरूको\n"
                           "घर घरमा घरबाट\n");
    const std::string cmd = cli() + " eval-paice" + rules_arg() +
                            " --groups " + groups.string() + " 2>/dev/null";
    CommandResult first = run(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.output ==
          "GDMT\t6\nGUMT\t0\nGDNT\t9\nGWMT\t0\nUI\t0.000000\nOI\t0.000000\n");
    CommandResult second = run(cmd);
    CHECK(second.output == first.output);  // byte-identical across runs
}

TEST_CASE("cli ir and classify round trips") {
    test_util::ScratchDir dir("cli_ir");
    std::string corpus_content;
    const char* labels[] = {"x", "y"};
    for (int cls = 0; cls < 2; ++cls) {
        for (int d = 0; d < 4; ++d) {
            std::string word = cls == 0 ? "मानिस" : "किताब";
            corpus_content += "{\"id\":\"d" + std::to_string(cls * 4 + d) +
                              "\",\"text\":\"" + word + "हरुको " + word +
                              "\",\"label\":\"" + labels[cls] + "\"}\n";
        }
    }
    auto corpus = dir.file("corpus.jsonl", corpus_content);
    auto index = dir.path / "index.tsv";
    auto model = dir.path / "model.tsv";

    CommandResult r = run(cli() + " ir index --corpus " + corpus.string() + rules_arg() +
                          " --out " + index.string() + " 2>/dev/null");
    CHECK(r.exit_code == 0);

    r = run(cli() + " ir query --index " + index.string() + rules_arg() +
            " --query मानिस -k 2 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1\td0\t") == 0);

    // Unstemmed query against the stemmed index is a data error.
    r = run(cli() + " ir query --index " + index.string() +
            " --query मानिस 2>/dev/null");
    CHECK(r.exit_code == 2);

    r = run(cli() + " classify train --corpus " + corpus.string() + rules_arg() +
            " --seed 5 --split 0.5 --out " + model.string() + " 2>/dev/null");
    CHECK(r.exit_code == 0);

    r = run(cli() + " classify eval --model " + model.string() + " --corpus " +
            corpus.string() + rules_arg() + " 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("micro_f1\t1.000000\n") == 0);
    CHECK(r.output.find("vocabulary_size\t") != std::string::npos);
}

#include "nepstem/rules.hpp"

#include <fstream>

#include "nepstem/devanagari.hpp"
#include "nepstem/normalizer.hpp"

namespace nepstem {

namespace {

const char* kType1File = "type1_suffixes.txt";
const char* kType2File = "type2_suffixes.txt";
const char* kExceptionsFile = "exceptions.txt";
const char* kPrefixesFile = "prefixes.txt";

std::string trim(const std::string& line) {
    std::size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    std::size_t end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

std::set<std::string> read_entry_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MissingFile("missing rule file: " + path.string());
    }
    std::set<std::string> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string entry = trim(line);
        if (entry.empty() || entry[0] == '#') continue;
        if (entry.find(' ') != std::string::npos || entry.find('\t') != std::string::npos) {
            throw MalformedEntry(path.filename().string() + ":" + std::to_string(line_no) +
                                 ": entry contains whitespace: \"" + entry + "\"");
        }
        std::string normalized;
        try {
            normalized = normalize_word(entry);
        } catch (const EmptyAfterNormalization&) {
            throw MalformedEntry(path.filename().string() + ":" + std::to_string(line_no) +
                                 ": entry is empty after normalization: \"" + entry + "\"");
        }
        entries.insert(normalized);
    }
    return entries;
}

bool ends_with(const std::string& word, const std::string& suffix) {
    return word.size() >= suffix.size() &&
           word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

RuleSet load_rule_set(const std::filesystem::path& rules_directory) {
    RuleSet rs;
    rs.type1_suffixes = read_entry_file(rules_directory / kType1File);
    rs.type2_suffixes = read_entry_file(rules_directory / kType2File);
    rs.exceptions = read_entry_file(rules_directory / kExceptionsFile);
    rs.prefixes = read_entry_file(rules_directory / kPrefixesFile);

    for (const auto* suffixes : {&rs.type1_suffixes, &rs.type2_suffixes}) {
        for (const std::string& s : *suffixes) {
            if (rs.exceptions.count(s)) {
                throw MalformedEntry("suffix \"" + s + "\" equals an exception word");
            }
        }
    }
    return rs;
}

void save_rule_set(const RuleSet& rs, const std::filesystem::path& rules_directory) {
    std::filesystem::create_directories(rules_directory);
    auto write = [&](const char* name, const std::set<std::string>& entries) {
        std::ofstream out(rules_directory / name, std::ios::binary);
        if (!out) {
            throw MissingFile("cannot write rule file: " + (rules_directory / name).string());
        }
        for (const std::string& e : entries) {
            out << e << '\n';
        }
    };
    write(kType1File, rs.type1_suffixes);
    write(kType2File, rs.type2_suffixes);
    write(kExceptionsFile, rs.exceptions);
    write(kPrefixesFile, rs.prefixes);
}

std::vector<std::string> validate_rule_set(const RuleSet& rs) {
    std::vector<std::string> diagnostics;
    auto check_length = [&](const char* kind, const std::set<std::string>& entries) {
        for (const std::string& s : entries) {
            if (letter_length(s) > 6) {
                diagnostics.push_back(std::string(kind) + " suffix \"" + s +
                                      "\" is longer than 6 letters");
            }
        }
    };
    check_length("type1", rs.type1_suffixes);
    check_length("type2", rs.type2_suffixes);

    for (const std::string& word : rs.exceptions) {
        bool covered = false;
        for (const auto* suffixes : {&rs.type1_suffixes, &rs.type2_suffixes}) {
            for (const std::string& s : *suffixes) {
                if (ends_with(word, s)) {
                    covered = true;
                    break;
                }
            }
            if (covered) break;
        }
        if (!covered) {
            diagnostics.push_back("exception \"" + word +
                                  "\" ends in no known suffix (dead entry)");
        }
    }

    for (const std::string& p : rs.prefixes) {
        if (letter_length(p) != 1) {
            diagnostics.push_back("prefix \"" + p + "\" is not a single letter");
        }
    }
    return diagnostics;
}

}  // namespace nepstem

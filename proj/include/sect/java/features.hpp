#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sect/java/syntax_tree.hpp"

namespace sect::java {

/// One source file of a corpus.
struct SourceUnit {
    std::string id;    // stable identifier, the corpus-relative path
    std::string path;  // corpus-relative path
    std::string text;
    std::size_t word_count = 0;
};

/// Number of maximal runs of non-whitespace bytes.
std::size_t count_words(std::string_view text);

/// Prefix of `text` ending after its `max_words`-th word (whole text if shorter).
std::string truncate_words(std::string_view text, std::size_t max_words);

SourceUnit make_unit(std::string id, std::string text);

/// Loads every *.java file below `dir`, sorted by relative path. Throws
/// InvalidInput if the directory is missing or a file is not UTF-8.
std::vector<SourceUnit> load_corpus(const std::filesystem::path& dir);

/// Confounder features of one compilation unit.
struct CodeFeatures {
    std::int64_t nloc = 0;
    std::int64_t token_count = 0;
    std::int64_t ast_levels = 0;
    std::int64_t ast_nodes = 0;
    std::int64_t identifier_count = 0;
    std::int64_t ast_error_count = 0;
    std::int64_t code_complexity = 0;

    friend bool operator==(const CodeFeatures&, const CodeFeatures&) = default;
};

/// Cyclomatic complexity is the number of method and constructor bodies
/// plus the decision points (if, for, foreach, while, do, case label, catch,
/// ?:, && and ||) anywhere in the unit; a unit without any body counts 1.
CodeFeatures extract_features(const SyntaxTree& tree);

}  // namespace sect::java

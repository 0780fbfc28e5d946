#include "sect/java/features.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "sect/error.hpp"

namespace sect::java {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::size_t count_words(std::string_view text) {
    std::size_t n = 0;
    bool in_word = false;
    for (char c : text) {
        if (is_space(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++n;
        }
    }
    return n;
}

std::string truncate_words(std::string_view text, std::size_t max_words) {
    std::size_t n = 0;
    bool in_word = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (is_space(text[i])) {
            if (in_word && n == max_words) return std::string(text.substr(0, i));
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++n;
        }
    }
    return std::string(text);
}

SourceUnit make_unit(std::string id, std::string text) {
    SourceUnit unit;
    unit.path = id;
    unit.id = std::move(id);
    unit.word_count = count_words(text);
    unit.text = std::move(text);
    return unit;
}

std::vector<SourceUnit> load_corpus(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        throw InvalidInput("corpus directory does not exist: " + dir.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".java") {
            files.push_back(entry.path());
        }
    }
    std::vector<SourceUnit> units;
    units.reserve(files.size());
    for (const auto& f : files) {
        std::ifstream in(f, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        auto text = ss.str();
        auto rel = fs::relative(f, dir).generic_string();
        if (!is_valid_utf8(text)) throw InvalidInput("not valid UTF-8: " + rel);
        units.push_back(make_unit(rel, std::move(text)));
    }
    std::sort(units.begin(), units.end(),
              [](const SourceUnit& a, const SourceUnit& b) { return a.id < b.id; });
    return units;
}

CodeFeatures extract_features(const SyntaxTree& tree) {
    CodeFeatures f;
    auto src = tree.source();

    // Lines carrying at least one token.
    std::set<std::int64_t> code_lines;
    std::int64_t line = 1;
    std::uint32_t scanned = 0;
    auto advance_to = [&](std::uint32_t pos) {
        line += std::count(src.begin() + scanned, src.begin() + pos, '\n');
        scanned = pos;
    };
    for (std::uint32_t i = 0; i < tree.tokens().size(); ++i) {
        const auto& t = tree.token(i);
        if (t.kind == TokenKind::Eof) continue;
        advance_to(t.begin);
        code_lines.insert(line);
        ++f.token_count;
        if (t.kind == TokenKind::Identifier) ++f.identifier_count;
        // Multi-line tokens (unterminated comments surfacing as errors).
        auto first = line;
        advance_to(t.end);
        for (auto l = first + 1; l <= line; ++l) code_lines.insert(l);
    }
    f.nloc = static_cast<std::int64_t>(code_lines.size());

    std::int64_t bodies = 0;
    std::int64_t decisions = 0;
    for (NodeId id = 0; id < tree.nodes().size(); ++id) {
        const auto& n = tree.node(id);
        ++f.ast_nodes;
        f.ast_levels = std::max<std::int64_t>(f.ast_levels, n.depth);
        switch (n.kind) {
            case NodeKind::Error:
                ++f.ast_error_count;
                break;
            case NodeKind::MethodDecl:
            case NodeKind::ConstructorDecl:
                if (tree.child_of_kind(id, NodeKind::Block) != kNoNode) ++bodies;
                break;
            case NodeKind::IfStmt:
            case NodeKind::ForStmt:
            case NodeKind::ForEachStmt:
            case NodeKind::WhileStmt:
            case NodeKind::DoStmt:
            case NodeKind::CatchClause:
            case NodeKind::CondExpr:
                ++decisions;
                break;
            case NodeKind::SwitchLabel:
                if (tree.has_own_token(id, "case")) ++decisions;
                break;
            case NodeKind::BinaryExpr: {
                auto op = tree.first_own_token_text(id);
                if (op == "&&" || op == "||") ++decisions;
                break;
            }
            default:
                break;
        }
    }
    f.code_complexity = std::max<std::int64_t>(bodies, 1) + decisions;
    return f;
}

}  // namespace sect::java

#include <algorithm>
#include <array>
#include <optional>

#include "sect/error.hpp"
#include "sect/java/syntax_tree.hpp"

namespace sect::java {
namespace {

struct SyntaxError {};

struct RawNode {
    NodeKind kind;
    std::uint32_t anchor;  // token index at close time, positions empty nodes
    std::vector<Element> elements;
};

constexpr std::array<std::string_view, 8> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double",
};

constexpr std::array<std::string_view, 12> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=",
};

bool is_primitive(std::string_view s) {
    return std::find(kPrimitives.begin(), kPrimitives.end(), s) != kPrimitives.end();
}

int binary_precedence(std::string_view op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
    if (op == "<<" || op == ">>" || op == ">>>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return 0;
}

bool is_modifier_keyword(std::string_view s) {
    return s == "public" || s == "protected" || s == "private" || s == "static" ||
           s == "abstract" || s == "final" || s == "native" || s == "synchronized" ||
           s == "transient" || s == "volatile" || s == "strictfp";
}

class Parser {
public:
    Parser(std::string_view src, std::vector<Token> tokens)
        : src_(src), toks_(std::move(tokens)) {}

    std::vector<Token> take_tokens() { return std::move(toks_); }
    std::vector<RawNode> take_nodes() { return std::move(raw_); }

    NodeId parse_compilation_unit() {
        auto m = open();
        if (at("package") || (at("@") && package_after_annotations())) {
            guarded_member([&] { parse_package(); });
        }
        while (at("import")) guarded_member([&] { parse_import(); });
        if (!at_eof() && !type_decl_ahead()) {
            parse_fragment();
        }
        while (!at_eof()) {
            if (at(";")) {
                bump();
                continue;
            }
            if (at("}")) {
                // Stray closer at top level.
                auto e = open();
                bump();
                close(e, NodeKind::Error);
                continue;
            }
            guarded_member([&] { parse_type_decl_with_modifiers(); });
        }
        stack_.push_back({static_cast<std::uint32_t>(pos_), false});  // Eof carries trailing trivia
        return close(m, NodeKind::CompilationUnit);
    }

private:
    // ---- token access --------------------------------------------------

    std::size_t clamp(std::size_t i) const { return std::min(i, toks_.size() - 1); }
    std::string_view text_at(std::size_t i) const {
        const auto& t = toks_[clamp(i)];
        return src_.substr(t.begin, t.end - t.begin);
    }
    TokenKind kind_at(std::size_t i) const { return toks_[clamp(i)].kind; }
    bool is_word_at(std::size_t i, std::string_view s) const {
        auto k = kind_at(i);
        return (k == TokenKind::Operator || k == TokenKind::Keyword) && text_at(i) == s;
    }
    bool at(std::string_view s) const { return is_word_at(pos_, s); }
    bool at_ident() const { return kind_at(pos_) == TokenKind::Identifier; }
    bool ident_at(std::size_t i) const { return kind_at(i) == TokenKind::Identifier; }
    bool at_eof() const { return kind_at(pos_) == TokenKind::Eof; }
    bool primitive_at(std::size_t i) const {
        return kind_at(i) == TokenKind::Keyword && is_primitive(text_at(i));
    }

    // ---- tree building -------------------------------------------------

    std::size_t open() const { return stack_.size(); }

    void bump() {
        if (at_eof()) throw SyntaxError{};
        stack_.push_back({static_cast<std::uint32_t>(pos_), false});
        ++pos_;
    }

    NodeId close(std::size_t mark, NodeKind kind) {
        RawNode node{kind, static_cast<std::uint32_t>(pos_),
                     std::vector<Element>(stack_.begin() + static_cast<std::ptrdiff_t>(mark),
                                          stack_.end())};
        stack_.resize(mark);
        auto id = static_cast<NodeId>(raw_.size());
        raw_.push_back(std::move(node));
        stack_.push_back({id, true});
        return id;
    }

    void expect(std::string_view s) {
        if (!at(s)) throw SyntaxError{};
        bump();
    }
    void expect_ident() {
        if (!at_ident()) throw SyntaxError{};
        bump();
    }

    // Splits a token beginning with '>' so the first '>' stands alone.
    void split_angle() {
        Token t = toks_[pos_];
        Token first{TokenKind::Operator, t.trivia_begin, t.begin, t.begin + 1};
        Token rest{TokenKind::Operator, t.begin + 1, t.begin + 1, t.end};
        toks_[pos_] = first;
        toks_.insert(toks_.begin() + static_cast<std::ptrdiff_t>(pos_) + 1, rest);
    }

    void expect_close_angle() {
        if (at(">")) {
            bump();
            return;
        }
        auto s = text_at(pos_);
        if (kind_at(pos_) == TokenKind::Operator && s.size() > 1 && s[0] == '>') {
            split_angle();
            bump();
            return;
        }
        throw SyntaxError{};
    }

    // ---- error recovery ------------------------------------------------

    template <typename F>
    void guarded_member(F&& f) {
        auto m = open();
        auto p = pos_;
        try {
            f();
        } catch (const SyntaxError&) {
            stack_.resize(m);
            pos_ = p;
            recover(true);
        }
    }

    template <typename F>
    void guarded_statement(F&& f) {
        auto m = open();
        auto p = pos_;
        try {
            f();
        } catch (const SyntaxError&) {
            stack_.resize(m);
            pos_ = p;
            recover(false);
        }
    }

    // Wraps tokens up to a synchronisation point in an Error node.
    void recover(bool member_level) {
        auto m = open();
        int depth = 0;
        bool consumed = false;
        while (!at_eof()) {
            if (depth == 0 && at("}") && consumed) break;
            if (depth == 0 && at("}") && !consumed) {
                // Nothing consumable before a closer: only at top level.
                if (!member_level) break;
                bump();
                consumed = true;
                break;
            }
            auto t = text_at(pos_);
            bool op = kind_at(pos_) == TokenKind::Operator;
            bump();
            consumed = true;
            // Only braces nest; an unbalanced paren must not swallow a closer.
            if (op && t == "{") {
                ++depth;
            } else if (op && t == "}") {
                if (depth > 0) --depth;
                if (depth == 0) break;
            } else if (op && t == ";" && depth == 0) {
                break;
            }
        }
        if (!consumed && !at_eof()) bump();
        if (open() > m) close(m, NodeKind::Error);
    }

    // ---- lookahead scanners (no tree effects) ----------------------------

    std::optional<std::size_t> scan_annotation(std::size_t i) const {
        if (!is_word_at(i, "@") || is_word_at(i + 1, "interface")) return std::nullopt;
        ++i;
        if (!ident_at(i)) return std::nullopt;
        ++i;
        while (is_word_at(i, ".") && ident_at(i + 1)) i += 2;
        if (is_word_at(i, "(")) {
            auto close = scan_balanced(i);
            if (!close) return std::nullopt;
            i = *close;
        }
        return i;
    }

    // i at an opener; returns index one past the matching closer.
    std::optional<std::size_t> scan_balanced(std::size_t i) const {
        int depth = 0;
        for (; kind_at(i) != TokenKind::Eof; ++i) {
            if (kind_at(i) != TokenKind::Operator) continue;
            auto t = text_at(i);
            if (t == "(" || t == "[" || t == "{") ++depth;
            if (t == ")" || t == "]" || t == "}") {
                if (--depth == 0) return i + 1;
            }
        }
        return std::nullopt;
    }

    std::optional<std::size_t> scan_type_args(std::size_t i) const {
        int depth = 0;
        for (; kind_at(i) != TokenKind::Eof; ++i) {
            auto k = kind_at(i);
            auto t = text_at(i);
            if (k == TokenKind::Operator) {
                if (t == "<") {
                    ++depth;
                } else if (t == ">" || t == ">>" || t == ">>>") {
                    depth -= static_cast<int>(t.size());
                    if (depth == 0) return i + 1;
                    if (depth < 0) return std::nullopt;
                } else if (t == "@") {
                    auto a = scan_annotation(i);
                    if (!a) return std::nullopt;
                    i = *a - 1;
                } else if (t != "." && t != "," && t != "?" && t != "&" && t != "[" && t != "]") {
                    return std::nullopt;
                }
            } else if (k == TokenKind::Keyword) {
                if (t != "extends" && t != "super" && !is_primitive(t)) return std::nullopt;
            } else if (k != TokenKind::Identifier) {
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    std::optional<std::size_t> scan_type(std::size_t i) const {
        while (is_word_at(i, "@")) {
            auto a = scan_annotation(i);
            if (!a) return std::nullopt;
            i = *a;
        }
        if (primitive_at(i)) {
            ++i;
        } else if (ident_at(i)) {
            ++i;
            if (is_word_at(i, "<")) {
                auto e = scan_type_args(i);
                if (!e) return std::nullopt;
                i = *e;
            }
            while (is_word_at(i, ".") && ident_at(i + 1)) {
                i += 2;
                if (is_word_at(i, "<")) {
                    auto e = scan_type_args(i);
                    if (!e) return std::nullopt;
                    i = *e;
                }
            }
        } else {
            return std::nullopt;
        }
        while (is_word_at(i, "[") && is_word_at(i + 1, "]")) i += 2;
        return i;
    }

    std::size_t scan_modifiers(std::size_t i) const {
        while (true) {
            if (kind_at(i) == TokenKind::Keyword && (text_at(i) == "final")) {
                ++i;
            } else if (is_word_at(i, "@") && !is_word_at(i + 1, "interface")) {
                auto a = scan_annotation(i);
                if (!a) return i;
                i = *a;
            } else {
                return i;
            }
        }
    }

    bool local_var_decl_ahead() const {
        auto i = scan_modifiers(pos_);
        auto j = scan_type(i);
        if (!j) return false;
        if (!ident_at(*j)) return false;
        auto n = *j + 1;
        return is_word_at(n, "=") || is_word_at(n, ";") || is_word_at(n, ",") ||
               is_word_at(n, "[") || is_word_at(n, ":");
    }

    std::size_t scan_member_modifiers(std::size_t i) const {
        while (true) {
            if (kind_at(i) == TokenKind::Keyword && is_modifier_keyword(text_at(i))) {
                ++i;
            } else if (is_word_at(i, "@") && !is_word_at(i + 1, "interface")) {
                auto a = scan_annotation(i);
                if (!a) return i;
                i = *a;
            } else {
                return i;
            }
        }
    }

    bool type_decl_ahead() const {
        auto i = scan_member_modifiers(pos_);
        return is_word_at(i, "class") || is_word_at(i, "interface") || is_word_at(i, "enum") ||
               (is_word_at(i, "@") && is_word_at(i + 1, "interface"));
    }

    bool method_decl_ahead() const {
        auto i = scan_member_modifiers(pos_);
        if (is_word_at(i, "<")) {
            auto e = scan_type_args(i);
            if (!e) return false;
            i = *e;
        }
        std::optional<std::size_t> j = is_word_at(i, "void") ? std::optional(i + 1) : scan_type(i);
        return j && ident_at(*j) && is_word_at(*j + 1, "(");
    }

    // Source without an enclosing type: methods, statements and a trailing
    // expression lacking its semicolon sit directly in the compilation unit.
    void parse_fragment() {
        while (!at_eof()) {
            if (type_decl_ahead()) return;
            if (at("}")) {
                auto e = open();
                bump();
                close(e, NodeKind::Error);
                continue;
            }
            if (method_decl_ahead()) {
                guarded_member([&] { parse_member(); });
                continue;
            }
            guarded_statement([&] {
                auto m = open();
                auto p = pos_;
                try {
                    parse_block_statement();
                } catch (const SyntaxError&) {
                    stack_.resize(m);
                    pos_ = p;
                    parse_expr();
                    if (!at_eof()) throw;
                    close(m, NodeKind::ExprStmt);
                }
            });
        }
    }

    bool local_class_ahead() const {
        std::size_t i = pos_;
        while (true) {
            if (kind_at(i) == TokenKind::Keyword &&
                (text_at(i) == "final" || text_at(i) == "abstract" || text_at(i) == "static" ||
                 text_at(i) == "strictfp")) {
                ++i;
            } else if (is_word_at(i, "@") && !is_word_at(i + 1, "interface")) {
                auto a = scan_annotation(i);
                if (!a) return false;
                i = *a;
            } else {
                break;
            }
        }
        return is_word_at(i, "class") || is_word_at(i, "interface") || is_word_at(i, "enum");
    }

    bool lambda_ahead() const {
        if (ident_at(pos_) && is_word_at(pos_ + 1, "->")) return true;
        if (!at("(")) return false;
        auto e = scan_balanced(pos_);
        return e && is_word_at(*e, "->");
    }

    bool package_after_annotations() const {
        std::size_t i = pos_;
        while (is_word_at(i, "@")) {
            auto a = scan_annotation(i);
            if (!a) return false;
            i = *a;
        }
        return is_word_at(i, "package");
    }

    bool cast_ahead() const {
        if (!at("(")) return false;
        if (primitive_at(pos_ + 1)) {
            auto j = scan_type(pos_ + 1);
            return j && is_word_at(*j, ")");
        }
        auto j = scan_type(pos_ + 1);
        if (!j) return false;
        while (is_word_at(*j, "&")) {
            j = scan_type(*j + 1);
            if (!j) return false;
        }
        if (!is_word_at(*j, ")")) return false;
        auto k = *j + 1;
        auto kk = kind_at(k);
        if (kk == TokenKind::Identifier || is_literal(kk)) return true;
        if (kk == TokenKind::Keyword) {
            auto t = text_at(k);
            return t == "this" || t == "super" || t == "new" || is_primitive(t);
        }
        if (kk == TokenKind::Operator) {
            auto t = text_at(k);
            return t == "(" || t == "!" || t == "~";
        }
        return false;
    }

    // ---- declarations --------------------------------------------------

    void parse_package() {
        auto m = open();
        while (at("@")) parse_annotation();
        expect("package");
        parse_qualified_tokens();
        expect(";");
        close(m, NodeKind::PackageDecl);
    }

    void parse_import() {
        auto m = open();
        expect("import");
        if (at("static")) bump();
        expect_ident();
        while (at(".")) {
            bump();
            if (at("*")) {
                bump();
                break;
            }
            expect_ident();
        }
        expect(";");
        close(m, NodeKind::ImportDecl);
    }

    void parse_qualified_tokens() {
        expect_ident();
        while (at(".") && ident_at(pos_ + 1)) {
            bump();
            bump();
        }
    }

    void parse_annotation() {
        auto m = open();
        expect("@");
        parse_qualified_tokens();
        if (at("(")) {
            auto a = open();
            bump();
            if (!at(")")) {
                if (ident_at(pos_) && is_word_at(pos_ + 1, "=")) {
                    while (true) {
                        expect_ident();
                        expect("=");
                        parse_element_value();
                        if (!at(",")) break;
                        bump();
                    }
                } else {
                    parse_element_value();
                }
            }
            expect(")");
            close(a, NodeKind::AnnotationArgs);
        }
        close(m, NodeKind::Annotation);
    }

    void parse_element_value() {
        if (at("@")) {
            parse_annotation();
        } else if (at("{")) {
            auto m = open();
            bump();
            while (!at("}")) {
                parse_element_value();
                if (!at(",")) break;
                bump();
            }
            expect("}");
            close(m, NodeKind::ArrayInit);
        } else {
            parse_conditional();
        }
    }

    // Creates a Modifiers node only when at least one modifier is present.
    void parse_modifiers(bool member_context) {
        auto m = open();
        bool any = false;
        while (true) {
            if (at("@") && !is_word_at(pos_ + 1, "interface")) {
                parse_annotation();
            } else if (kind_at(pos_) == TokenKind::Keyword && is_modifier_keyword(text_at(pos_))) {
                if (!member_context && text_at(pos_) != "final") break;
                bump();
            } else if (member_context && at("default") && !is_word_at(pos_ + 1, ":")) {
                bump();
            } else {
                break;
            }
            any = true;
        }
        if (any) close(m, NodeKind::Modifiers);
    }

    void parse_type_decl_with_modifiers() {
        auto m = open();
        parse_modifiers(true);
        parse_type_decl_rest(m);
    }

    void parse_type_decl_rest(std::size_t m) {
        if (at("class")) {
            bump();
            expect_ident();
            if (at("<")) parse_type_params();
            if (at("extends")) {
                bump();
                parse_type(false);
            }
            if (at("implements")) {
                bump();
                parse_type_list();
            }
            parse_class_body(false);
            close(m, NodeKind::ClassDecl);
        } else if (at("interface")) {
            bump();
            expect_ident();
            if (at("<")) parse_type_params();
            if (at("extends")) {
                bump();
                parse_type_list();
            }
            parse_class_body(false);
            close(m, NodeKind::InterfaceDecl);
        } else if (at("enum")) {
            bump();
            expect_ident();
            if (at("implements")) {
                bump();
                parse_type_list();
            }
            parse_class_body(true);
            close(m, NodeKind::EnumDecl);
        } else if (at("@") && is_word_at(pos_ + 1, "interface")) {
            bump();
            bump();
            expect_ident();
            parse_class_body(false);
            close(m, NodeKind::AnnotationDecl);
        } else {
            throw SyntaxError{};
        }
    }

    void parse_type_list() {
        parse_type(false);
        while (at(",")) {
            bump();
            parse_type(false);
        }
    }

    void parse_type_params() {
        auto m = open();
        expect("<");
        while (true) {
            auto p = open();
            while (at("@")) parse_annotation();
            expect_ident();
            if (at("extends")) {
                bump();
                parse_type(false);
                while (at("&")) {
                    bump();
                    parse_type(false);
                }
            }
            close(p, NodeKind::TypeParam);
            if (!at(",")) break;
            bump();
        }
        expect_close_angle();
        close(m, NodeKind::TypeParams);
    }

    void parse_class_body(bool is_enum) {
        auto m = open();
        expect("{");
        if (is_enum) parse_enum_constants();
        while (!at("}") && !at_eof()) {
            if (at(";")) {
                bump();
                continue;
            }
            guarded_member([&] { parse_member(); });
        }
        expect("}");
        close(m, NodeKind::ClassBody);
    }

    void parse_enum_constants() {
        while (at_ident() || at("@")) {
            guarded_member([&] {
                auto m = open();
                while (at("@")) parse_annotation();
                expect_ident();
                if (at("(")) parse_arguments();
                if (at("{")) parse_class_body(false);
                close(m, NodeKind::EnumConstant);
            });
            if (!at(",")) break;
            bump();
        }
        if (at(";")) bump();
    }

    void parse_member() {
        if (at("{") || (at("static") && is_word_at(pos_ + 1, "{"))) {
            auto m = open();
            if (at("static")) bump();
            parse_block();
            close(m, NodeKind::InitializerBlock);
            return;
        }
        auto m = open();
        parse_modifiers(true);
        if (at("class") || at("interface") || at("enum") ||
            (at("@") && is_word_at(pos_ + 1, "interface"))) {
            parse_type_decl_rest(m);
            return;
        }
        if (at("<")) parse_type_params();
        if (at_ident() && is_word_at(pos_ + 1, "(")) {
            bump();
            parse_formal_params();
            if (at("throws")) parse_throws();
            parse_block();
            close(m, NodeKind::ConstructorDecl);
            return;
        }
        parse_type(true);
        expect_ident();
        if (at("(")) {
            parse_formal_params();
            while (at("[")) {
                bump();
                expect("]");
            }
            if (at("throws")) parse_throws();
            if (at("{")) {
                parse_block();
            } else if (at("default")) {
                bump();
                parse_element_value();
                expect(";");
            } else {
                expect(";");
            }
            close(m, NodeKind::MethodDecl);
            return;
        }
        // Field: the first declarator's name is already consumed.
        auto d = open() - 1;
        parse_declarator_rest(d);
        while (at(",")) {
            bump();
            parse_declarator();
        }
        expect(";");
        close(m, NodeKind::FieldDecl);
    }

    void parse_throws() {
        auto m = open();
        expect("throws");
        parse_type_list();
        close(m, NodeKind::Throws);
    }

    void parse_formal_params() {
        auto m = open();
        expect("(");
        if (!at(")")) {
            while (true) {
                parse_formal_param();
                if (!at(",")) break;
                bump();
            }
        }
        expect(")");
        close(m, NodeKind::FormalParams);
    }

    void parse_formal_param() {
        auto m = open();
        parse_modifiers(false);
        parse_type(false);
        if (at("...")) bump();
        if (at("this")) {
            bump();
        } else {
            expect_ident();
        }
        while (at("[")) {
            bump();
            expect("]");
        }
        close(m, NodeKind::FormalParam);
    }

    // ---- types ---------------------------------------------------------

    void parse_type(bool allow_void, bool allow_dims = true) {
        auto m = open();
        while (at("@")) parse_annotation();
        if (primitive_at(pos_) || (allow_void && at("void"))) {
            bump();
        } else {
            expect_ident();
            if (at("<")) parse_type_args();
            while (at(".") && (ident_at(pos_ + 1) || is_word_at(pos_ + 1, "@"))) {
                bump();
                while (at("@")) parse_annotation();
                expect_ident();
                if (at("<")) parse_type_args();
            }
        }
        if (allow_dims) {
            while (at("[") && is_word_at(pos_ + 1, "]")) {
                bump();
                bump();
            }
        }
        close(m, NodeKind::Type);
    }

    void parse_type_args() {
        auto m = open();
        expect("<");
        if (!at(">")) {
            while (true) {
                if (at("?")) {
                    auto w = open();
                    while (at("@")) parse_annotation();
                    bump();
                    if (at("extends") || at("super")) {
                        bump();
                        parse_type(false);
                    }
                    close(w, NodeKind::Type);
                } else {
                    parse_type(false);
                }
                if (!at(",")) break;
                bump();
            }
        }
        expect_close_angle();
        close(m, NodeKind::TypeArgs);
    }

    // ---- statements ----------------------------------------------------

    void parse_block() {
        auto m = open();
        expect("{");
        while (!at("}") && !at_eof()) {
            guarded_statement([&] { parse_block_statement(); });
        }
        expect("}");
        close(m, NodeKind::Block);
    }

    void parse_block_statement() {
        if (local_class_ahead()) {
            auto m = open();
            parse_modifiers(true);
            parse_type_decl_rest(m);
            return;
        }
        if (local_var_decl_ahead()) {
            auto m = open();
            parse_local_var_decl_body();
            expect(";");
            close(m, NodeKind::LocalVarDecl);
            return;
        }
        parse_statement();
    }

    void parse_local_var_decl_body() {
        parse_modifiers(false);
        parse_type(false);
        parse_declarator();
        while (at(",")) {
            bump();
            parse_declarator();
        }
    }

    void parse_declarator() {
        auto m = open();
        expect_ident();
        parse_declarator_rest(m);
    }

    void parse_declarator_rest(std::size_t m) {
        while (at("[")) {
            bump();
            expect("]");
        }
        if (at("=")) {
            bump();
            parse_variable_init();
        }
        close(m, NodeKind::VarDeclarator);
    }

    void parse_variable_init() {
        if (at("{")) {
            parse_array_init();
        } else {
            parse_expr();
        }
    }

    void parse_array_init() {
        auto m = open();
        expect("{");
        while (!at("}")) {
            parse_variable_init();
            if (!at(",")) break;
            bump();
        }
        expect("}");
        close(m, NodeKind::ArrayInit);
    }

    void parse_paren_condition() {
        expect("(");
        parse_expr();
        expect(")");
    }

    void parse_statement() {
        auto m = open();
        if (at("{")) {
            parse_block();
            return;
        }
        if (at(";")) {
            bump();
            close(m, NodeKind::EmptyStmt);
            return;
        }
        if (at_ident() && is_word_at(pos_ + 1, ":")) {
            bump();
            bump();
            parse_statement();
            close(m, NodeKind::LabeledStmt);
            return;
        }
        auto kw = kind_at(pos_) == TokenKind::Keyword ? text_at(pos_) : std::string_view{};
        if (kw == "if") {
            bump();
            parse_paren_condition();
            parse_statement();
            if (at("else")) {
                bump();
                parse_statement();
            }
            close(m, NodeKind::IfStmt);
        } else if (kw == "while") {
            bump();
            parse_paren_condition();
            parse_statement();
            close(m, NodeKind::WhileStmt);
        } else if (kw == "do") {
            bump();
            parse_statement();
            expect("while");
            parse_paren_condition();
            expect(";");
            close(m, NodeKind::DoStmt);
        } else if (kw == "for") {
            parse_for(m);
        } else if (kw == "switch") {
            parse_switch(m);
        } else if (kw == "return") {
            bump();
            if (!at(";")) parse_expr();
            expect(";");
            close(m, NodeKind::ReturnStmt);
        } else if (kw == "break" || kw == "continue") {
            bump();
            if (at_ident()) bump();
            expect(";");
            close(m, kw == "break" ? NodeKind::BreakStmt : NodeKind::ContinueStmt);
        } else if (kw == "throw") {
            bump();
            parse_expr();
            expect(";");
            close(m, NodeKind::ThrowStmt);
        } else if (kw == "try") {
            parse_try(m);
        } else if (kw == "synchronized") {
            bump();
            parse_paren_condition();
            parse_block();
            close(m, NodeKind::SyncStmt);
        } else if (kw == "assert") {
            bump();
            parse_expr();
            if (at(":")) {
                bump();
                parse_expr();
            }
            expect(";");
            close(m, NodeKind::AssertStmt);
        } else if (kw == "else" || kw == "case" || kw == "default" || kw == "catch" ||
                   kw == "finally") {
            throw SyntaxError{};
        } else {
            parse_expr();
            expect(";");
            close(m, NodeKind::ExprStmt);
        }
    }

    void parse_for(std::size_t m) {
        bump();
        expect("(");
        // Enhanced for: [modifiers] Type name ':'
        auto i = scan_modifiers(pos_);
        auto j = scan_type(i);
        if (j && ident_at(*j) && is_word_at(*j + 1, ":")) {
            auto p = open();
            parse_modifiers(false);
            parse_type(false);
            expect_ident();
            close(p, NodeKind::FormalParam);
            expect(":");
            parse_expr();
            expect(")");
            parse_statement();
            close(m, NodeKind::ForEachStmt);
            return;
        }
        auto init = open();
        if (!at(";")) {
            if (local_var_decl_ahead()) {
                auto d = open();
                parse_local_var_decl_body();
                close(d, NodeKind::LocalVarDecl);
            } else {
                parse_expr_list();
            }
        }
        close(init, NodeKind::ForInit);
        expect(";");
        auto cond = open();
        if (!at(";")) parse_expr();
        close(cond, NodeKind::ForCond);
        expect(";");
        auto upd = open();
        if (!at(")")) parse_expr_list();
        close(upd, NodeKind::ForUpdate);
        expect(")");
        parse_statement();
        close(m, NodeKind::ForStmt);
    }

    void parse_expr_list() {
        parse_expr();
        while (at(",")) {
            bump();
            parse_expr();
        }
    }

    void parse_switch(std::size_t m) {
        bump();
        parse_paren_condition();
        expect("{");
        while (!at("}") && !at_eof()) {
            auto g = open();
            if (!at("case") && !at("default")) {
                // Statements before any label.
                guarded_statement([&] { throw SyntaxError{}; });
                continue;
            }
            while (at("case") || at("default")) {
                auto l = open();
                auto p = pos_;
                try {
                    if (at("case")) {
                        bump();
                        parse_conditional();
                    } else {
                        bump();
                    }
                    expect(":");
                    close(l, NodeKind::SwitchLabel);
                } catch (const SyntaxError&) {
                    stack_.resize(l);
                    pos_ = p;
                    recover(false);
                }
            }
            while (!at("case") && !at("default") && !at("}") && !at_eof()) {
                guarded_statement([&] { parse_block_statement(); });
            }
            close(g, NodeKind::SwitchGroup);
        }
        expect("}");
        close(m, NodeKind::SwitchStmt);
    }

    void parse_try(std::size_t m) {
        bump();
        if (at("(")) {
            auto r = open();
            bump();
            while (!at(")")) {
                auto res = open();
                parse_modifiers(false);
                parse_type(false);
                expect_ident();
                expect("=");
                parse_expr();
                close(res, NodeKind::Resource);
                if (!at(";")) break;
                bump();
            }
            expect(")");
            close(r, NodeKind::Resources);
        }
        parse_block();
        while (at("catch")) {
            auto c = open();
            bump();
            expect("(");
            auto p = open();
            parse_modifiers(false);
            parse_type(false);
            while (at("|")) {
                bump();
                parse_type(false);
            }
            expect_ident();
            close(p, NodeKind::CatchParam);
            expect(")");
            parse_block();
            close(c, NodeKind::CatchClause);
        }
        if (at("finally")) {
            auto f = open();
            bump();
            parse_block();
            close(f, NodeKind::FinallyClause);
        }
        close(m, NodeKind::TryStmt);
    }

    // ---- expressions ---------------------------------------------------

    void parse_expr() {
        if (lambda_ahead()) {
            parse_lambda();
            return;
        }
        auto m = open();
        parse_conditional();
        if (kind_at(pos_) == TokenKind::Operator) {
            auto t = text_at(pos_);
            if (std::find(kAssignOps.begin(), kAssignOps.end(), t) != kAssignOps.end()) {
                bump();
                parse_expr();
                close(m, NodeKind::AssignExpr);
            }
        }
    }

    void parse_lambda() {
        auto m = open();
        auto p = open();
        if (at_ident()) {
            bump();
        } else {
            expect("(");
            if (!at(")")) {
                bool bare = at_ident() && (is_word_at(pos_ + 1, ",") || is_word_at(pos_ + 1, ")"));
                while (true) {
                    if (bare) {
                        expect_ident();
                    } else {
                        parse_formal_param();
                    }
                    if (!at(",")) break;
                    bump();
                }
            }
            expect(")");
        }
        close(p, NodeKind::LambdaParams);
        expect("->");
        if (at("{")) {
            parse_block();
        } else {
            parse_expr();
        }
        close(m, NodeKind::LambdaExpr);
    }

    void parse_conditional() {
        auto m = open();
        parse_binary(1);
        if (at("?")) {
            bump();
            parse_expr();
            expect(":");
            if (lambda_ahead()) {
                parse_lambda();
            } else {
                parse_conditional();
            }
            close(m, NodeKind::CondExpr);
        }
    }

    void parse_binary(int min_prec) {
        auto m = open();
        parse_unary();
        while (true) {
            auto k = kind_at(pos_);
            if (k != TokenKind::Operator && !(k == TokenKind::Keyword && at("instanceof"))) break;
            int prec = binary_precedence(text_at(pos_));
            if (prec == 0 || prec < min_prec) break;
            if (at("instanceof")) {
                bump();
                parse_type(false);
                close(m, NodeKind::InstanceOfExpr);
                continue;
            }
            bump();
            parse_binary(prec + 1);
            close(m, NodeKind::BinaryExpr);
        }
    }

    void parse_unary() {
        if (at("+") || at("-") || at("++") || at("--") || at("!") || at("~")) {
            auto m = open();
            bump();
            parse_unary();
            close(m, NodeKind::PrefixExpr);
            return;
        }
        if (cast_ahead()) {
            auto m = open();
            bump();
            parse_type(false);
            while (at("&")) {
                bump();
                parse_type(false);
            }
            expect(")");
            if (lambda_ahead()) {
                parse_lambda();
            } else {
                parse_unary();
            }
            close(m, NodeKind::CastExpr);
            return;
        }
        auto m = open();
        parse_primary(m);
        while (at("++") || at("--")) {
            bump();
            close(m, NodeKind::PostfixExpr);
        }
    }

    void parse_arguments() {
        auto m = open();
        expect("(");
        if (!at(")")) parse_expr_list();
        expect(")");
        close(m, NodeKind::Arguments);
    }

    void parse_primary(std::size_t m) {
        auto k = kind_at(pos_);
        if (is_literal(k)) {
            bump();
            close(m, NodeKind::Literal);
        } else if (k == TokenKind::Identifier) {
            bump();
            if (at("(")) {
                parse_arguments();
                close(m, NodeKind::MethodCall);
            } else {
                close(m, NodeKind::NameExpr);
            }
        } else if (at("this") || at("super")) {
            bool is_this = at("this");
            bump();
            if (at("(")) {
                parse_arguments();
                close(m, NodeKind::MethodCall);
            } else {
                close(m, is_this ? NodeKind::ThisExpr : NodeKind::SuperExpr);
            }
        } else if (at("(")) {
            bump();
            parse_expr();
            expect(")");
            close(m, NodeKind::ParenExpr);
        } else if (at("new")) {
            parse_new(m);
        } else if (primitive_at(pos_) || at("void")) {
            parse_type(true);
            if (at("::")) {
                bump();
                expect("new");
                close(m, NodeKind::MethodRef);
            } else {
                expect(".");
                expect("class");
                close(m, NodeKind::ClassLiteral);
            }
        } else {
            throw SyntaxError{};
        }
        parse_selectors(m);
    }

    void parse_selectors(std::size_t m) {
        while (true) {
            if (at(".")) {
                bump();
                if (at("<")) {
                    parse_type_args();
                    expect_ident();
                    parse_arguments();
                    close(m, NodeKind::MethodCall);
                } else if (at_ident()) {
                    bump();
                    if (at("(")) {
                        parse_arguments();
                        close(m, NodeKind::MethodCall);
                    } else {
                        close(m, NodeKind::FieldAccess);
                    }
                } else if (at("class")) {
                    bump();
                    close(m, NodeKind::ClassLiteral);
                } else if (at("this")) {
                    bump();
                    close(m, NodeKind::ThisExpr);
                } else if (at("super")) {
                    bump();
                    close(m, NodeKind::SuperExpr);
                } else if (at("new")) {
                    parse_new(m);
                } else {
                    throw SyntaxError{};
                }
            } else if (at("[")) {
                if (is_word_at(pos_ + 1, "]")) {
                    while (at("[")) {
                        bump();
                        expect("]");
                    }
                    if (at("::")) {
                        bump();
                        expect("new");
                        close(m, NodeKind::MethodRef);
                    } else {
                        expect(".");
                        expect("class");
                        close(m, NodeKind::ClassLiteral);
                    }
                } else {
                    bump();
                    parse_expr();
                    expect("]");
                    close(m, NodeKind::ArrayAccess);
                }
            } else if (at("::")) {
                bump();
                if (at("<")) parse_type_args();
                if (at("new")) {
                    bump();
                } else {
                    expect_ident();
                }
                close(m, NodeKind::MethodRef);
            } else {
                return;
            }
        }
    }

    void parse_new(std::size_t m) {
        expect("new");
        if (at("<")) parse_type_args();
        parse_type(false, false);
        if (at("[")) {
            while (at("[")) {
                if (is_word_at(pos_ + 1, "]")) {
                    bump();
                    bump();
                } else {
                    auto d = open();
                    bump();
                    parse_expr();
                    expect("]");
                    close(d, NodeKind::DimExpr);
                }
            }
            if (at("{")) parse_array_init();
            close(m, NodeKind::NewArray);
            return;
        }
        parse_arguments();
        if (at("{")) parse_class_body(false);
        close(m, NodeKind::NewObject);
    }

    std::string_view src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<Element> stack_;
    std::vector<RawNode> raw_;
};

struct Compactor {
    const std::vector<RawNode>& raw;
    std::vector<Node> out;

    // Returns the new id; fills token range by recursion.
    NodeId emit(NodeId raw_id, NodeId parent, std::uint32_t depth) {
        auto id = static_cast<NodeId>(out.size());
        out.push_back(Node{raw[raw_id].kind, parent, 0, 0, 1, depth, {}});
        std::vector<Element> elements;
        elements.reserve(raw[raw_id].elements.size());
        std::uint32_t first = raw[raw_id].anchor;
        std::uint32_t end = raw[raw_id].anchor;
        bool seen = false;
        for (const auto& e : raw[raw_id].elements) {
            if (e.is_node) {
                auto child = emit(e.index, id, depth + 1);
                elements.push_back({child, true});
                const auto& c = out[child];
                if (c.first_token != c.end_token) {
                    if (!seen) first = c.first_token;
                    end = c.end_token;
                    seen = true;
                }
            } else {
                elements.push_back(e);
                if (!seen) first = e.index;
                end = e.index + 1;
                seen = true;
            }
        }
        auto& n = out[id];
        n.elements = std::move(elements);
        if (seen) {
            n.first_token = first;
            n.end_token = end;
        } else {
            n.first_token = n.end_token = raw[raw_id].anchor;
        }
        n.subtree_size = static_cast<std::uint32_t>(out.size() - id);
        return id;
    }
};

}  // namespace

SyntaxTree parse(std::string text) {
    if (text.empty()) throw InvalidInput("parse: empty source text");
    if (!is_valid_utf8(text)) throw InvalidInput("parse: source is not valid UTF-8");
    auto source = std::make_shared<const std::string>(std::move(text));
    Parser parser(*source, lex(*source));
    NodeId root = parser.parse_compilation_unit();
    auto raw = parser.take_nodes();
    Compactor compactor{raw, {}};
    compactor.out.reserve(raw.size());
    compactor.emit(root, kNoNode, 1);
    return SyntaxTree(source, parser.take_tokens(), std::move(compactor.out));
}

}  // namespace sect::java

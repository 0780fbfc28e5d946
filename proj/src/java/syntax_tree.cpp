#include "sect/java/syntax_tree.hpp"

#include <array>

namespace sect::java {

std::string_view kind_name(NodeKind kind) {
    static constexpr std::array<std::string_view, 77> kNames = {
        "CompilationUnit", "PackageDecl",     "ImportDecl",    "Modifiers",
        "Annotation",      "AnnotationArgs",  "ClassDecl",     "InterfaceDecl",
        "EnumDecl",        "AnnotationDecl",  "TypeParams",    "TypeParam",
        "ClassBody",       "EnumConstant",    "FieldDecl",     "MethodDecl",
        "ConstructorDecl", "InitializerBlock", "FormalParams", "FormalParam",
        "Throws",          "Type",            "TypeArgs",      "Block",
        "LocalVarDecl",    "VarDeclarator",   "ArrayInit",     "EmptyStmt",
        "ExprStmt",        "IfStmt",          "WhileStmt",     "DoStmt",
        "ForStmt",         "ForInit",         "ForCond",       "ForUpdate",
        "ForEachStmt",     "SwitchStmt",      "SwitchGroup",   "SwitchLabel",
        "BreakStmt",       "ContinueStmt",    "ReturnStmt",    "ThrowStmt",
        "TryStmt",         "Resources",       "Resource",      "CatchClause",
        "CatchParam",      "FinallyClause",   "SyncStmt",      "LabeledStmt",
        "AssertStmt",      "AssignExpr",      "CondExpr",      "BinaryExpr",
        "InstanceOfExpr",  "PrefixExpr",      "PostfixExpr",   "CastExpr",
        "ParenExpr",       "Literal",         "NameExpr",      "FieldAccess",
        "MethodCall",      "Arguments",       "ArrayAccess",   "NewObject",
        "NewArray",        "DimExpr",         "LambdaExpr",    "LambdaParams",
        "MethodRef",       "ThisExpr",        "SuperExpr",     "ClassLiteral",
        "Error",
    };
    static_assert(kNames.size() == static_cast<std::size_t>(NodeKind::Error) + 1);
    auto i = static_cast<std::size_t>(kind);
    return i < kNames.size() ? kNames[i] : std::string_view{"?"};
}

bool is_statement(NodeKind kind) {
    switch (kind) {
        case NodeKind::Block:
        case NodeKind::LocalVarDecl:
        case NodeKind::EmptyStmt:
        case NodeKind::ExprStmt:
        case NodeKind::IfStmt:
        case NodeKind::WhileStmt:
        case NodeKind::DoStmt:
        case NodeKind::ForStmt:
        case NodeKind::ForEachStmt:
        case NodeKind::SwitchStmt:
        case NodeKind::BreakStmt:
        case NodeKind::ContinueStmt:
        case NodeKind::ReturnStmt:
        case NodeKind::ThrowStmt:
        case NodeKind::TryStmt:
        case NodeKind::SyncStmt:
        case NodeKind::LabeledStmt:
        case NodeKind::AssertStmt:
            return true;
        default:
            return false;
    }
}

bool is_expression(NodeKind kind) {
    switch (kind) {
        case NodeKind::AssignExpr:
        case NodeKind::CondExpr:
        case NodeKind::BinaryExpr:
        case NodeKind::InstanceOfExpr:
        case NodeKind::PrefixExpr:
        case NodeKind::PostfixExpr:
        case NodeKind::CastExpr:
        case NodeKind::ParenExpr:
        case NodeKind::Literal:
        case NodeKind::NameExpr:
        case NodeKind::FieldAccess:
        case NodeKind::MethodCall:
        case NodeKind::ArrayAccess:
        case NodeKind::NewObject:
        case NodeKind::NewArray:
        case NodeKind::LambdaExpr:
        case NodeKind::MethodRef:
        case NodeKind::ThisExpr:
        case NodeKind::SuperExpr:
        case NodeKind::ClassLiteral:
            return true;
        default:
            return false;
    }
}

SyntaxTree::SyntaxTree(std::shared_ptr<const std::string> source, std::vector<Token> tokens,
                       std::vector<Node> nodes)
    : source_(std::move(source)), tokens_(std::move(tokens)), nodes_(std::move(nodes)) {}

std::string_view SyntaxTree::token_text(std::uint32_t index) const {
    const auto& t = tokens_[index];
    return std::string_view(*source_).substr(t.begin, t.end - t.begin);
}

Span SyntaxTree::span(NodeId id) const {
    const auto& n = nodes_[id];
    if (n.first_token == n.end_token) {
        auto pos = tokens_[n.first_token].begin;
        return {pos, pos};
    }
    return {tokens_[n.first_token].begin, tokens_[n.end_token - 1].end};
}

std::string_view SyntaxTree::text(NodeId id) const {
    auto s = span(id);
    return std::string_view(*source_).substr(s.begin, s.end - s.begin);
}

std::vector<NodeId> SyntaxTree::children(NodeId id) const {
    std::vector<NodeId> out;
    for (const auto& e : nodes_[id].elements) {
        if (e.is_node) out.push_back(e.index);
    }
    return out;
}

NodeId SyntaxTree::child(NodeId id, std::size_t i) const {
    for (const auto& e : nodes_[id].elements) {
        if (e.is_node && i-- == 0) return e.index;
    }
    return kNoNode;
}

NodeId SyntaxTree::child_of_kind(NodeId id, NodeKind kind) const {
    for (const auto& e : nodes_[id].elements) {
        if (e.is_node && nodes_[e.index].kind == kind) return e.index;
    }
    return kNoNode;
}

std::vector<std::uint32_t> SyntaxTree::own_tokens(NodeId id) const {
    std::vector<std::uint32_t> out;
    for (const auto& e : nodes_[id].elements) {
        if (!e.is_node) out.push_back(e.index);
    }
    return out;
}

bool SyntaxTree::has_own_token(NodeId id, std::string_view text) const {
    for (const auto& e : nodes_[id].elements) {
        if (!e.is_node && token_text(e.index) == text) return true;
    }
    return false;
}

std::string_view SyntaxTree::first_own_token_text(NodeId id) const {
    for (const auto& e : nodes_[id].elements) {
        if (!e.is_node) return token_text(e.index);
    }
    return {};
}

bool SyntaxTree::subtree_has_error(NodeId id) const {
    auto end = id + nodes_[id].subtree_size;
    for (auto i = id; i < end; ++i) {
        if (nodes_[i].kind == NodeKind::Error) return true;
    }
    return false;
}

std::size_t SyntaxTree::error_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes_) {
        if (node.kind == NodeKind::Error) ++n;
    }
    return n;
}

std::string print(const SyntaxTree& tree) {
    std::string out;
    out.reserve(tree.source().size());
    for (const auto& t : tree.tokens()) {
        out.append(tree.source().substr(t.trivia_begin, t.end - t.trivia_begin));
    }
    return out;
}

std::string dump(const SyntaxTree& tree) {
    std::string out;
    for (NodeId id = 0; id < tree.nodes().size(); ++id) {
        const auto& n = tree.node(id);
        out.append(2 * (n.depth - 1), ' ');
        out.append(kind_name(n.kind));
        for (auto t : tree.own_tokens(id)) {
            if (tree.token(t).kind == TokenKind::Eof) continue;
            out.append(" '");
            out.append(tree.token_text(t));
            out.append("'");
        }
        out.push_back('\n');
    }
    return out;
}

bool structurally_equal(const SyntaxTree& a, const SyntaxTree& b) {
    if (a.nodes().size() != b.nodes().size() || a.tokens().size() != b.tokens().size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.nodes().size(); ++i) {
        const auto& na = a.nodes()[i];
        const auto& nb = b.nodes()[i];
        if (na.kind != nb.kind || na.elements.size() != nb.elements.size()) return false;
        for (std::size_t k = 0; k < na.elements.size(); ++k) {
            const auto& ea = na.elements[k];
            const auto& eb = nb.elements[k];
            if (ea.is_node != eb.is_node || ea.index != eb.index) return false;
        }
    }
    for (std::uint32_t i = 0; i < a.tokens().size(); ++i) {
        if (a.tokens()[i].kind != b.tokens()[i].kind || a.token_text(i) != b.token_text(i)) {
            return false;
        }
    }
    return true;
}

}  // namespace sect::java

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sect/java/lexer.hpp"

namespace sect::java {

enum class NodeKind : std::uint8_t {
    CompilationUnit,
    PackageDecl,
    ImportDecl,
    Modifiers,
    Annotation,
    AnnotationArgs,
    ClassDecl,
    InterfaceDecl,
    EnumDecl,
    AnnotationDecl,
    TypeParams,
    TypeParam,
    ClassBody,
    EnumConstant,
    FieldDecl,
    MethodDecl,
    ConstructorDecl,
    InitializerBlock,
    FormalParams,
    FormalParam,
    Throws,
    Type,
    TypeArgs,
    // statements
    Block,
    LocalVarDecl,
    VarDeclarator,
    ArrayInit,
    EmptyStmt,
    ExprStmt,
    IfStmt,
    WhileStmt,
    DoStmt,
    ForStmt,
    ForInit,
    ForCond,
    ForUpdate,
    ForEachStmt,
    SwitchStmt,
    SwitchGroup,
    SwitchLabel,
    BreakStmt,
    ContinueStmt,
    ReturnStmt,
    ThrowStmt,
    TryStmt,
    Resources,
    Resource,
    CatchClause,
    CatchParam,
    FinallyClause,
    SyncStmt,
    LabeledStmt,
    AssertStmt,
    // expressions
    AssignExpr,
    CondExpr,
    BinaryExpr,
    InstanceOfExpr,
    PrefixExpr,
    PostfixExpr,
    CastExpr,
    ParenExpr,
    Literal,
    NameExpr,
    FieldAccess,
    MethodCall,
    Arguments,
    ArrayAccess,
    NewObject,
    NewArray,
    DimExpr,
    LambdaExpr,
    LambdaParams,
    MethodRef,
    ThisExpr,
    SuperExpr,
    ClassLiteral,
    Error,
};

std::string_view kind_name(NodeKind kind);

bool is_statement(NodeKind kind);
bool is_expression(NodeKind kind);

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xFFFFFFFFu;

/// One ordered child of a node: either a nested node or a token.
struct Element {
    std::uint32_t index;
    bool is_node;
};

/// Nodes are stored in pre-order, so a node's descendants occupy the id
/// range (id, id + subtree_size).
struct Node {
    NodeKind kind;
    NodeId parent;
    std::uint32_t first_token;  // first token index covered
    std::uint32_t end_token;    // one past the last token covered
    std::uint32_t subtree_size;
    std::uint32_t depth;        // root is 1
    std::vector<Element> elements;
};

/// Byte range [begin, end) of source text.
struct Span {
    std::uint32_t begin;
    std::uint32_t end;
};

/// Lossless concrete syntax tree for one Java compilation unit. Every byte
/// of the input (including comments and whitespace) belongs to exactly one
/// token's text or leading trivia. Immutable after construction.
class SyntaxTree {
public:
    SyntaxTree(std::shared_ptr<const std::string> source, std::vector<Token> tokens,
               std::vector<Node> nodes);

    std::string_view source() const { return *source_; }
    std::span<const Token> tokens() const { return tokens_; }
    std::span<const Node> nodes() const { return nodes_; }
    const Node& node(NodeId id) const { return nodes_[id]; }
    const Token& token(std::uint32_t index) const { return tokens_[index]; }
    NodeId root() const { return 0; }

    std::string_view token_text(std::uint32_t index) const;
    /// Source span of a node excluding the first token's leading trivia.
    Span span(NodeId id) const;
    std::string_view text(NodeId id) const;

    /// Child nodes in order.
    std::vector<NodeId> children(NodeId id) const;
    /// The i-th child node, or kNoNode.
    NodeId child(NodeId id, std::size_t i) const;
    /// First child node of `kind`, or kNoNode.
    NodeId child_of_kind(NodeId id, NodeKind kind) const;
    /// Tokens directly owned by `id` (not inside a child node).
    std::vector<std::uint32_t> own_tokens(NodeId id) const;
    /// True if the node directly owns a token with this text.
    bool has_own_token(NodeId id, std::string_view text) const;
    /// Text of the first directly owned token (operator of binary/assign, etc.).
    std::string_view first_own_token_text(NodeId id) const;

    bool contains(NodeId ancestor, NodeId descendant) const {
        return descendant >= ancestor && descendant < ancestor + nodes_[ancestor].subtree_size;
    }
    NodeId parent(NodeId id) const { return nodes_[id].parent; }
    bool subtree_has_error(NodeId id) const;

    std::size_t error_count() const;

private:
    std::shared_ptr<const std::string> source_;
    std::vector<Token> tokens_;
    std::vector<Node> nodes_;
};

/// Parses Java 8 source. Syntax errors become Error nodes, so any UTF-8 input
/// yields a tree. Throws InvalidInput on empty or non-UTF-8 input.
SyntaxTree parse(std::string text);

/// Renders the tree back to source: every token's leading trivia followed by
/// its text. For a parsed tree this reproduces the input byte for byte.
std::string print(const SyntaxTree& tree);

/// Indented outline of the tree, one node per line with leaf token texts.
std::string dump(const SyntaxTree& tree);

/// Structural identity: same node kinds, same element shape and the same
/// token kinds and texts. Trivia is ignored.
bool structurally_equal(const SyntaxTree& a, const SyntaxTree& b);

}  // namespace sect::java

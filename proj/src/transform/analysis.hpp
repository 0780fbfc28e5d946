#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sect/java/syntax_tree.hpp"

namespace sect::transform {

using java::NodeId;
using java::NodeKind;
using java::SyntaxTree;

// A local variable or parameter binding inside one method-like unit.
struct Binding {
    std::string name;
    std::string type;          // normalised type text, "" when inferred (lambda params)
    std::uint32_t name_token;  // token index of the declaring identifier
    NodeId decl;               // declaring node
    std::uint32_t scope_begin; // byte range where the binding is visible
    std::uint32_t scope_end;
};

// Method, constructor or initializer block whose locals are resolved
// together. Nested class bodies are opaque to it.
struct Unit {
    NodeId node;
    std::vector<Binding> bindings;
    std::vector<NodeId> names;  // NameExpr nodes outside nested class bodies
    std::vector<NodeId> nested_bodies;
};

class Analysis {
public:
    explicit Analysis(const SyntaxTree& tree);

    const SyntaxTree& tree() const { return tree_; }
    std::string_view src() const { return tree_.source(); }
    const std::vector<Unit>& units() const { return units_; }

    // Sites inside a member that contains a syntax error are never rewritten.
    bool tainted(NodeId id) const { return tainted_[id]; }

    // Innermost unit whose opaque region holds `id`, or nullptr.
    const Unit* unit_of(NodeId id) const;
    // Binding visible at a NameExpr, or nullptr for fields and unknowns.
    const Binding* resolve(NodeId name_expr) const;
    // Static type of an expression as far as local reasoning allows, "" if unknown.
    std::string type_of(NodeId expr) const;
    // Declared type of a simple-name expression bound to a local or parameter.
    std::string local_type(NodeId expr) const;

    std::string_view text(NodeId id) const { return tree_.text(id); }
    // Token texts joined without trivia.
    std::string compact(NodeId id) const;
    bool is_simple_name(NodeId id) const { return tree_.node(id).kind == NodeKind::NameExpr; }
    std::string_view name_of(NodeId name_expr) const { return tree_.first_own_token_text(name_expr); }

private:
    void build_unit(NodeId id);
    void collect(Unit& unit, NodeId id);
    void bind(Unit& unit, NodeId decl, std::uint32_t name_token, std::string type,
              std::uint32_t scope_begin, std::uint32_t scope_end);
    std::string declared_type(NodeId type_node, NodeId owner) const;

    const SyntaxTree& tree_;
    std::vector<Unit> units_;
    std::vector<int> unit_index_;  // per node, -1 outside any unit
    std::vector<bool> tainted_;
};

// ---- statement and control-flow predicates ------------------------------

bool in_block_position(const SyntaxTree& t, NodeId stmt);
bool is_loop(NodeKind k);
// Unlabelled break / continue inside `body` that would leave or restart the
// statement owning it.
bool has_break_to(const SyntaxTree& t, NodeId body);
bool has_continue_to(const SyntaxTree& t, NodeId body);
// Conservative: true only when the statement certainly completes abruptly.
bool cannot_complete(const SyntaxTree& t, NodeId stmt);
bool is_labeled(const SyntaxTree& t, NodeId stmt);
// Free of side effects and exceptions: names, literals, parentheses and
// non-dividing arithmetic, comparison and logic.
bool is_pure(const SyntaxTree& t, NodeId expr);
int precedence(const SyntaxTree& t, NodeId expr);
bool has_comment(const SyntaxTree& t, std::uint32_t first_token, std::uint32_t end_token);

// ---- numeric type reasoning -------------------------------------------

bool is_numeric(std::string_view type);
bool is_int_family(std::string_view type);
std::string binary_promotion(std::string_view a, std::string_view b);
// Whether `c ? a : b` assigned to `target` yields the same value as
// assigning each arm to it directly.
bool conditional_preserves(std::string_view target, std::string_view a, std::string_view b);

// ---- layout -------------------------------------------------------------

// Only whitespace precedes `pos` on its line, in a source spanning several lines.
bool starts_line(std::string_view src, std::uint32_t pos);
std::string line_indent(std::string_view src, std::uint32_t pos);
std::string reindent(std::string_view text, int delta);
// Separator placing the next statement like one that starts at `pos`.
std::string statement_sep(std::string_view src, std::uint32_t pos);
// `{ body }` laid out for a statement starting at `pos`.
std::string braced(std::string_view src, std::uint32_t pos, std::string_view body);

// ---- fresh identifiers ----------------------------------------------------

class FreshNames {
public:
    FreshNames(const SyntaxTree& tree, std::uint64_t seed);
    std::string next();

private:
    std::mt19937_64 rng_;
    std::unordered_set<std::string> taken_;
};

}  // namespace sect::transform

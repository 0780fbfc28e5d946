#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "transform/analysis.hpp"
#include "transform/edit_buffer.hpp"

namespace sect::transform {

// One invocation of a rule over a tree. With `out` null the rule only
// counts its sites; otherwise it also records the rewrites.
struct RuleContext {
    const Analysis& an;
    EditBuffer* out;
    FreshNames* fresh;

    const SyntaxTree& tree() const { return an.tree(); }
    std::string_view src() const { return an.src(); }
    std::string render(NodeId id) const {
        auto s = tree().span(id);
        return out->render(s.begin, s.end);
    }
    std::string render(std::uint32_t b, std::uint32_t e) const { return out->render(b, e); }
    void replace(NodeId id, std::string text) const {
        auto s = tree().span(id);
        out->replace(s.begin, s.end, std::move(text));
    }
};

using RuleFn = std::size_t (*)(RuleContext&);

// Untainted nodes of `kind` in pre-order.
std::vector<NodeId> nodes_of(const Analysis& an, NodeKind kind);
// Orders sites so nested ones are rewritten before the sites enclosing them.
void innermost_first(const SyntaxTree& t, std::vector<NodeId>& sites);
std::string paren_if(bool cond, std::string text);

std::size_t rename_variable(RuleContext& cx);       // 1
std::size_t for_to_while(RuleContext& cx);          // 2
std::size_t while_to_for(RuleContext& cx);          // 3
std::size_t do_to_while(RuleContext& cx);           // 4
std::size_t else_if_to_else(RuleContext& cx);       // 5
std::size_t else_to_else_if(RuleContext& cx);       // 6
std::size_t switch_to_if(RuleContext& cx);          // 7
std::size_t unary_to_add(RuleContext& cx);          // 8
std::size_t add_assign_expand(RuleContext& cx);     // 9
std::size_t divide_var_decl(RuleContext& cx);       // 10
std::size_t merge_var_decl(RuleContext& cx);        // 11
std::size_t swap_statement(RuleContext& cx);        // 12
std::size_t modify_constant(RuleContext& cx);       // 13
std::size_t reverse_if(RuleContext& cx);            // 14
std::size_t if_to_cond_exp(RuleContext& cx);        // 15
std::size_t cond_exp_to_if(RuleContext& cx);        // 16
std::size_t infix_dividing(RuleContext& cx);        // 17
std::size_t divide_pre_post_fix(RuleContext& cx);   // 18
std::size_t divide_composed_if(RuleContext& cx);    // 19
std::size_t loop_if_continue(RuleContext& cx);      // 20
std::size_t swap_equal_exp(RuleContext& cx);        // 21
std::size_t swap_string_equal(RuleContext& cx);     // 22
std::size_t swap_relation(RuleContext& cx);         // 23

}  // namespace sect::transform

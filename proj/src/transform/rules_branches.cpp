#include "sect/java/lexer.hpp"
#include "transform/rule_impl.hpp"

namespace sect::transform {

using java::kNoNode;

namespace {

bool is_assignable_local(const Analysis& an, NodeId name) {
    if (!an.is_simple_name(name)) return false;
    auto type = an.local_type(name);
    return type == "int" || type == "long" || type == "float" || type == "double" ||
           type == "boolean" || type == "String";
}

// `x = e;` possibly wrapped in a one-statement block; returns the AssignExpr.
NodeId single_assignment(const SyntaxTree& t, NodeId stmt) {
    if (t.node(stmt).kind == NodeKind::Block) {
        auto kids = t.children(stmt);
        if (kids.size() != 1 || has_comment(t, t.node(stmt).first_token + 1, t.node(stmt).end_token)) {
            return kNoNode;
        }
        stmt = kids[0];
    }
    if (t.node(stmt).kind != NodeKind::ExprStmt) return kNoNode;
    auto e = t.child(stmt, 0);
    if (t.node(e).kind != NodeKind::AssignExpr || t.first_own_token_text(e) != "=") return kNoNode;
    return e;
}

// Block for a branch placed on the line holding `anchor`.
std::string branch_block(std::string_view src, std::uint32_t anchor, bool multiline,
                         std::string_view body) {
    if (!multiline) return body.empty() ? "{ }" : "{ " + std::string(body) + " }";
    auto indent = line_indent(src, anchor);
    if (body.empty()) return "{\n" + indent + "}";
    return "{\n" + indent + "    " + std::string(body) + "\n" + indent + "}";
}

}  // namespace

// if (a) S else if (b) T  ->  if (a) S else { if (b) T }
std::size_t else_if_to_else(RuleContext& cx) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::IfStmt)) {
        auto kids = t.children(id);
        if (kids.size() == 3 && t.node(kids[2]).kind == NodeKind::IfStmt) sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    auto src = cx.src();
    for (auto id : sites) {
        auto inner = t.child(id, 2);
        auto anchor = t.token(t.own_tokens(id).back()).begin;  // the else keyword
        auto body = reindent(cx.render(inner), 4);
        cx.replace(inner, branch_block(src, anchor, starts_line(src, t.span(id).begin) ||
                                                        starts_line(src, anchor), body));
    }
    return sites.size();
}

// if (a) S else { if (b) T }  ->  if (a) S else if (b) T
std::size_t else_to_else_if(RuleContext& cx) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::IfStmt)) {
        auto kids = t.children(id);
        if (kids.size() != 3 || t.node(kids[2]).kind != NodeKind::Block) continue;
        auto inner = t.children(kids[2]);
        if (inner.size() != 1 || t.node(inner[0]).kind != NodeKind::IfStmt) continue;
        const auto& block = t.node(kids[2]);
        if (has_comment(t, block.first_token + 1, t.node(inner[0]).first_token + 1) ||
            has_comment(t, block.end_token - 1, block.end_token)) {
            continue;
        }
        // Without an enclosing block a trailing else could rebind.
        auto head = id;
        while (t.node(t.parent(head)).kind == NodeKind::IfStmt && t.child(t.parent(head), 2) == head) {
            head = t.parent(head);
        }
        if (!in_block_position(t, head)) continue;
        sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    for (auto id : sites) {
        auto block = t.child(id, 2);
        cx.replace(block, reindent(cx.render(t.child(block, 0)), -4));
    }
    return sites.size();
}

// switch without fall-through  ->  if / else if / else on the scrutinee.
std::size_t switch_to_if(RuleContext& cx) {
    const auto& t = cx.tree();
    struct Group {
        std::vector<NodeId> labels;  // case expressions
        bool is_default = false;
        std::vector<NodeId> stmts;   // without the closing break
    };
    auto ends_group = [&](NodeId s) {
        auto k = t.node(s).kind;
        return k == NodeKind::BreakStmt || k == NodeKind::ReturnStmt || k == NodeKind::ThrowStmt ||
               k == NodeKind::ContinueStmt;
    };
    auto is_case_literal = [&](NodeId e) {
        if (t.node(e).kind == NodeKind::PrefixExpr && t.first_own_token_text(e) == "-") {
            e = t.child(e, 0);
        }
        return t.node(e).kind == NodeKind::Literal;
    };
    auto analyse = [&](NodeId sw, std::vector<Group>& out) {
        auto kids = t.children(sw);
        auto k0 = t.node(kids[0]).kind;
        if (k0 != NodeKind::NameExpr && k0 != NodeKind::Literal) return false;
        bool any_case = false;
        for (std::size_t g = 1; g < kids.size(); ++g) {
            Group group;
            std::vector<NodeId> stmts;
            for (auto c : t.children(kids[g])) {
                if (t.node(c).kind != NodeKind::SwitchLabel) {
                    stmts.push_back(c);
                } else if (t.has_own_token(c, "default")) {
                    group.is_default = true;
                } else {
                    auto e = t.child(c, 0);
                    if (e == kNoNode || !is_case_literal(e)) return false;
                    group.labels.push_back(e);
                }
            }
            bool last = g + 1 == kids.size();
            if (!stmts.empty() && !ends_group(stmts.back()) && !last) return false;
            if (stmts.empty() && !last) return false;
            if (!stmts.empty() && t.node(stmts.back()).kind == NodeKind::BreakStmt &&
                t.own_tokens(stmts.back()).size() == 2) {
                stmts.pop_back();
            }
            for (auto s : stmts) {
                auto k = t.node(s).kind;
                if (k == NodeKind::LocalVarDecl || k == NodeKind::ClassDecl) return false;
                if (has_break_to(t, s)) return false;
            }
            group.stmts = std::move(stmts);
            any_case = any_case || (!group.labels.empty() && !group.is_default);
            out.push_back(std::move(group));
        }
        return any_case;
    };
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::SwitchStmt)) {
        std::vector<Group> groups;
        if (!is_labeled(t, id) && analyse(id, groups)) sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    auto src = cx.src();
    for (auto id : sites) {
        std::vector<Group> groups;
        analyse(id, groups);
        auto begin = t.span(id).begin;
        bool multiline = starts_line(src, begin);
        auto scrutinee = cx.render(t.child(id, 0));
        auto body_of = [&](const Group& g) {
            if (g.stmts.empty()) return std::string();
            auto text = cx.render(t.span(g.stmts.front()).begin, t.span(g.stmts.back()).end);
            return reindent(text, -4);
        };
        std::string text;
        const Group* fallback = nullptr;
        for (const auto& g : groups) {
            if (g.is_default) {
                fallback = &g;
                continue;
            }
            std::string cond;
            for (auto label : g.labels) {
                if (!cond.empty()) cond += " || ";
                auto lit = cx.render(label);
                bool is_string = t.token(t.node(label).first_token).kind == java::TokenKind::StringLiteral;
                cond += is_string ? scrutinee + ".equals(" + lit + ")" : scrutinee + " == " + lit;
            }
            if (!text.empty()) text += " else ";
            text += "if (" + cond + ") " + branch_block(src, begin, multiline, body_of(g));
        }
        if (fallback != nullptr) text += " else " + branch_block(src, begin, multiline, body_of(*fallback));
        cx.replace(id, text);
    }
    return sites.size();
}

// if (c) A else B  ->  if (!(c)) B else A
std::size_t reverse_if(RuleContext& cx) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::IfStmt)) {
        if (t.children(id).size() == 3) sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    auto src = cx.src();
    for (auto id : sites) {
        auto kids = t.children(id);
        auto cond = cx.render(kids[0]);
        auto then_text = cx.render(kids[1]);
        auto else_text = cx.render(kids[2]);
        if (t.node(kids[2]).kind != NodeKind::Block) {
            auto anchor = t.span(kids[1]).begin;
            else_text = branch_block(src, anchor, starts_line(src, t.span(id).begin),
                                     reindent(else_text, 4));
        }
        cx.replace(kids[0], "!(" + cond + ")");
        cx.replace(kids[1], else_text);
        cx.replace(kids[2], then_text);
    }
    return sites.size();
}

// if (c) x = a; else x = b;  ->  x = c ? a : b;
std::size_t if_to_cond_exp(RuleContext& cx) {
    const auto& t = cx.tree();
    const auto& an = cx.an;
    std::vector<NodeId> sites;
    for (auto id : nodes_of(an, NodeKind::IfStmt)) {
        auto kids = t.children(id);
        if (kids.size() != 3) continue;
        auto a = single_assignment(t, kids[1]);
        auto b = single_assignment(t, kids[2]);
        if (a == kNoNode || b == kNoNode) continue;
        auto xa = t.child(a, 0);
        auto xb = t.child(b, 0);
        if (!is_assignable_local(an, xa) || !an.is_simple_name(xb) || an.resolve(xa) != an.resolve(xb)) {
            continue;
        }
        if (!conditional_preserves(an.local_type(xa), an.type_of(t.child(a, 1)),
                                   an.type_of(t.child(b, 1)))) {
            continue;
        }
        sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    for (auto id : sites) {
        auto kids = t.children(id);
        auto a = single_assignment(t, kids[1]);
        auto b = single_assignment(t, kids[2]);
        auto ea = t.child(a, 1);
        auto eb = t.child(b, 1);
        auto text = cx.render(t.child(a, 0)) + " = " +
                    paren_if(precedence(t, kids[0]) <= 2, cx.render(kids[0])) + " ? " +
                    cx.render(ea) + " : " + paren_if(precedence(t, eb) <= 1, cx.render(eb)) + ";";
        cx.replace(id, text);
    }
    return sites.size();
}

// x = c ? a : b;  ->  if (c) { x = a; } else { x = b; }
// T x = c ? a : b;  ->  T x; if (c) { x = a; } else { x = b; }
std::size_t cond_exp_to_if(RuleContext& cx) {
    const auto& t = cx.tree();
    const auto& an = cx.an;
    struct Site {
        NodeId stmt;
        NodeId target;  // NameExpr or VarDeclarator
        NodeId cond;
    };
    std::vector<Site> found;
    for (NodeId id = 0; id < t.nodes().size(); ++id) {
        if (an.tainted(id)) continue;
        const auto& n = t.node(id);
        if (n.kind == NodeKind::ExprStmt) {
            auto e = t.child(id, 0);
            if (t.node(e).kind != NodeKind::AssignExpr || t.first_own_token_text(e) != "=") continue;
            auto x = t.child(e, 0);
            auto c = t.child(e, 1);
            if (t.node(c).kind != NodeKind::CondExpr || !is_assignable_local(an, x)) continue;
            if (!conditional_preserves(an.local_type(x), an.type_of(t.child(c, 1)),
                                       an.type_of(t.child(c, 2)))) {
                continue;
            }
            found.push_back({id, x, c});
        } else if (n.kind == NodeKind::LocalVarDecl && in_block_position(t, id)) {
            auto kids = t.children(id);
            auto type_node = t.child_of_kind(id, NodeKind::Type);
            if (kids.back() == type_node || kids.end()[-2] != type_node) continue;
            auto decl = kids.back();
            auto c = t.child(decl, 0);
            if (c == kNoNode || t.node(c).kind != NodeKind::CondExpr) continue;
            if (t.own_tokens(decl).size() != 2) continue;  // dims on the declarator
            auto type = an.compact(type_node);
            if (type != "int" && type != "long" && type != "float" && type != "double" &&
                type != "boolean" && type != "String") {
                continue;
            }
            if (!conditional_preserves(type, an.type_of(t.child(c, 1)), an.type_of(t.child(c, 2)))) {
                continue;
            }
            found.push_back({id, decl, c});
        }
    }
    if (cx.out == nullptr) return found.size();
    std::vector<NodeId> order;
    for (const auto& s : found) order.push_back(s.stmt);
    innermost_first(t, order);
    auto src = cx.src();
    for (auto stmt : order) {
        const auto& s = *std::find_if(found.begin(), found.end(), [&](const Site& x) { return x.stmt == stmt; });
        auto begin = t.span(stmt).begin;
        bool multiline = starts_line(src, begin);
        std::string name = t.node(s.target).kind == NodeKind::NameExpr
                               ? cx.render(s.target)
                               : std::string(t.first_own_token_text(s.target));
        auto arm = [&](NodeId e) { return name + " = " + cx.render(e) + ";"; };
        auto text = "if (" + cx.render(t.child(s.cond, 0)) + ") " +
                    branch_block(src, begin, multiline, arm(t.child(s.cond, 1))) + " else " +
                    branch_block(src, begin, multiline, arm(t.child(s.cond, 2)));
        if (t.node(s.target).kind == NodeKind::VarDeclarator) {
            auto decl_head = cx.render(begin, t.token(t.node(s.target).first_token).end);
            text = decl_head + ";" + statement_sep(src, begin) + text;
        }
        cx.replace(stmt, text);
    }
    return found.size();
}

// if (a && b) S  ->  if (a) { if (b) S }
std::size_t divide_composed_if(RuleContext& cx) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::IfStmt)) {
        auto kids = t.children(id);
        if (kids.size() != 2) continue;
        if (t.node(kids[0]).kind != NodeKind::BinaryExpr || t.first_own_token_text(kids[0]) != "&&") {
            continue;
        }
        sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    auto src = cx.src();
    for (auto id : sites) {
        auto cond = t.child(id, 0);
        auto inner = "if (" + cx.render(t.child(cond, 1)) + ") " + cx.render(t.child(id, 1));
        auto text = "if (" + cx.render(t.child(cond, 0)) + ") " + braced(src, t.span(id).begin, inner);
        cx.replace(id, text);
    }
    return sites.size();
}

}  // namespace sect::transform

#include "sect/java/lexer.hpp"
#include "transform/rule_impl.hpp"

namespace sect::transform {

using java::kNoNode;

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

// Tokens after `stmt` up to the end of the scope a hoisted declaration would
// leak into mention `name`.
bool mentioned_after(const SyntaxTree& t, NodeId stmt, const std::vector<std::string_view>& names) {
    auto container = t.parent(stmt);
    if (t.node(container).kind == NodeKind::SwitchGroup) container = t.parent(container);
    auto end = t.node(container).end_token;
    for (auto i = t.node(stmt).end_token; i < end; ++i) {
        if (t.token(i).kind != java::TokenKind::Identifier) continue;
        if (std::find(names.begin(), names.end(), t.token_text(i)) != names.end()) return true;
    }
    return false;
}

bool declares_locals(const SyntaxTree& t, NodeId body) {
    if (t.node(body).kind != NodeKind::Block) return false;
    for (auto c : t.children(body)) {
        auto k = t.node(c).kind;
        if (k == NodeKind::LocalVarDecl || k == NodeKind::ClassDecl || k == NodeKind::InterfaceDecl ||
            k == NodeKind::EnumDecl) {
            return true;
        }
    }
    return false;
}

}  // namespace

// for (I; C; U) B  ->  I; while (C) { B U; }
std::size_t for_to_while(RuleContext& cx) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::ForStmt)) {
        if (is_labeled(t, id)) continue;
        auto body = t.children(id).back();
        auto update = t.child_of_kind(id, NodeKind::ForUpdate);
        if (!t.children(update).empty() &&
            (has_continue_to(t, body) || cannot_complete(t, body))) {
            continue;
        }
        sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    auto src = cx.src();
    for (auto id : sites) {
        auto begin = t.span(id).begin;
        auto init = t.child_of_kind(id, NodeKind::ForInit);
        auto cond = t.child_of_kind(id, NodeKind::ForCond);
        auto update = t.child_of_kind(id, NodeKind::ForUpdate);
        auto body = t.children(id).back();

        std::vector<std::string> stmts;
        std::vector<std::string_view> hoisted;
        for (auto e : t.children(init)) {
            stmts.push_back(cx.render(e) + ";");
            if (t.node(e).kind != NodeKind::LocalVarDecl) continue;
            for (auto d : t.children(e)) {
                if (t.node(d).kind == NodeKind::VarDeclarator) hoisted.push_back(t.first_own_token_text(d));
            }
        }
        std::vector<std::string> updates;
        for (auto u : t.children(update)) updates.push_back(cx.render(u) + ";");

        std::string new_body;
        auto body_stmts = t.children(body);
        if (updates.empty()) {
            new_body = cx.render(body);
        } else if (t.node(body).kind == NodeKind::Block && !body_stmts.empty()) {
            auto last = t.span(body_stmts.back());
            auto sep = statement_sep(src, last.begin);
            cx.out->insert(last.end, sep + join(updates, sep));
            new_body = cx.render(body);
        } else {
            std::vector<std::string> inner;
            if (t.node(body).kind != NodeKind::Block) inner.push_back(cx.render(body));
            inner.insert(inner.end(), updates.begin(), updates.end());
            if (starts_line(src, begin)) {
                auto indent = line_indent(src, begin);
                new_body = "{\n" + indent + "    " + join(inner, "\n" + indent + "    ") + "\n" + indent + "}";
            } else {
                new_body = "{ " + join(inner, " ") + " }";
            }
        }
        auto cond_expr = t.child(cond, 0);
        auto cond_text = cond_expr == kNoNode ? std::string("true") : cx.render(cond_expr);
        stmts.push_back("while (" + cond_text + ") " + new_body);

        auto text = join(stmts, statement_sep(src, begin));
        bool wrap = !t.children(init).empty() &&
                    (!in_block_position(t, id) || mentioned_after(t, id, hoisted));
        cx.replace(id, wrap ? braced(src, begin, text) : text);
    }
    return sites.size();
}

// while (C) B  ->  for (; C;) B
std::size_t while_to_for(RuleContext& cx) {
    const auto& t = cx.tree();
    auto sites = nodes_of(cx.an, NodeKind::WhileStmt);
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    for (auto id : sites) {
        auto cond = t.child(id, 0);
        auto rparen = t.own_tokens(id).back();
        auto head_begin = t.span(id).begin;
        auto text = "for (; " + cx.render(cond) + ";)";
        cx.out->replace(head_begin, t.token(rparen).end, text);
    }
    return sites.size();
}

// do B while (C);  ->  B while (C) B
std::size_t do_to_while(RuleContext& cx) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::DoStmt)) {
        auto body = t.child(id, 0);
        if (is_labeled(t, id) || declares_locals(t, body) || has_break_to(t, body) ||
            has_continue_to(t, body) || cannot_complete(t, body)) {
            continue;
        }
        sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    auto src = cx.src();
    for (auto id : sites) {
        auto begin = t.span(id).begin;
        auto body = cx.render(t.child(id, 0));
        auto cond = cx.render(t.child(id, 1));
        auto text = body + statement_sep(src, begin) + "while (" + cond + ") " + body;
        cx.replace(id, in_block_position(t, id) ? text : braced(src, begin, text));
    }
    return sites.size();
}

// loop { if (C) continue; REST }  ->  loop { if (!(C)) { REST } }
std::size_t loop_if_continue(RuleContext& cx) {
    const auto& t = cx.tree();
    struct Site {
        NodeId loop;
        NodeId guard;
    };
    std::vector<Site> found;
    auto is_bare_continue = [&](NodeId s) {
        if (t.node(s).kind == NodeKind::Block) {
            auto kids = t.children(s);
            if (kids.size() != 1) return false;
            s = kids[0];
        }
        if (t.node(s).kind != NodeKind::ContinueStmt) return false;
        for (auto tok : t.own_tokens(s)) {
            if (t.token(tok).kind == java::TokenKind::Identifier) return false;
        }
        return true;
    };
    for (NodeId id = 0; id < t.nodes().size(); ++id) {
        if (!is_loop(t.node(id).kind) || cx.an.tainted(id)) continue;
        auto body = t.node(id).kind == NodeKind::DoStmt ? t.child(id, 0) : t.children(id).back();
        if (t.node(body).kind != NodeKind::Block) continue;
        auto stmts = t.children(body);
        if (stmts.empty() || t.node(stmts[0]).kind != NodeKind::IfStmt) continue;
        auto guard = t.children(stmts[0]);
        if (guard.size() != 2 || !is_bare_continue(guard[1])) continue;
        found.push_back({id, stmts[0]});
    }
    if (cx.out == nullptr) return found.size();
    std::vector<NodeId> order;
    for (const auto& s : found) order.push_back(s.loop);
    innermost_first(t, order);
    auto src = cx.src();
    for (auto loop : order) {
        auto guard = std::find_if(found.begin(), found.end(), [&](const Site& s) { return s.loop == loop; })->guard;
        auto body = t.parent(guard);
        auto stmts = t.children(body);
        auto begin = t.span(guard).begin;
        auto head = "if (!(" + cx.render(t.child(guard, 0)) + ")) ";
        std::string rest;
        if (stmts.size() > 1) rest = cx.render(t.span(stmts[1]).begin, t.span(stmts.back()).end);
        std::string text;
        if (rest.empty()) {
            text = head + (starts_line(src, begin) ? "{\n" + line_indent(src, begin) + "}" : "{ }");
        } else {
            text = head + braced(src, begin, rest);
        }
        cx.out->replace(begin, t.span(stmts.back()).end, text);
    }
    return found.size();
}

}  // namespace sect::transform

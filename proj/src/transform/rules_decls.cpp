#include <set>

#include "sect/java/lexer.hpp"
#include "transform/rule_impl.hpp"

namespace sect::transform {

using java::kNoNode;

namespace {

std::vector<NodeId> declarators(const SyntaxTree& t, NodeId decl) {
    std::vector<NodeId> out;
    for (auto c : t.children(decl)) {
        if (t.node(c).kind == NodeKind::VarDeclarator) out.push_back(c);
    }
    return out;
}

// Modifiers and type of a declaration, as written.
std::uint32_t prefix_end(const SyntaxTree& t, NodeId decl) {
    return t.span(t.child_of_kind(decl, NodeKind::Type)).end;
}

std::string compact_prefix(const Analysis& an, NodeId decl) {
    std::string out;
    for (auto c : an.tree().children(decl)) {
        if (an.tree().node(c).kind == NodeKind::VarDeclarator) break;
        if (!out.empty()) out += ' ';
        out += an.compact(c);
    }
    return out;
}

std::vector<NodeId> statement_lists(const Analysis& an) {
    auto out = nodes_of(an, NodeKind::Block);
    auto groups = nodes_of(an, NodeKind::SwitchGroup);
    out.insert(out.end(), groups.begin(), groups.end());
    out.push_back(0);  // statements of a fragment
    return out;
}

// Untainted statements; anything else breaks adjacency.
std::vector<NodeId> statements_of(const Analysis& an, NodeId list) {
    const auto& t = an.tree();
    std::vector<NodeId> out;
    for (auto c : t.children(list)) {
        if (t.node(c).kind == NodeKind::SwitchLabel) continue;
        out.push_back(java::is_statement(t.node(c).kind) && !an.tainted(c) ? c : kNoNode);
    }
    return out;
}

void names_in(const SyntaxTree& t, NodeId id, std::set<std::string_view>& out) {
    if (t.node(id).kind == NodeKind::NameExpr) out.insert(t.first_own_token_text(id));
    for (auto c : t.children(id)) names_in(t, c, out);
}

bool only_literals(const SyntaxTree& t, NodeId e) {
    switch (t.node(e).kind) {
        case NodeKind::Literal:
            return true;
        case NodeKind::ParenExpr:
        case NodeKind::PrefixExpr:
        case NodeKind::BinaryExpr:
            for (auto c : t.children(e)) {
                if (!only_literals(t, c)) return false;
            }
            return true;
        default:
            return false;
    }
}

bool is_primitive(std::string_view type) {
    return type == "int" || type == "long" || type == "short" || type == "byte" || type == "char" ||
           type == "float" || type == "double" || type == "boolean";
}

}  // namespace

// int a = 1, b;  ->  int a = 1; int b;
std::size_t divide_var_decl(RuleContext& cx) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::LocalVarDecl)) {
        if (in_block_position(t, id) && declarators(t, id).size() >= 2) sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    auto src = cx.src();
    for (auto id : sites) {
        auto begin = t.span(id).begin;
        auto prefix = cx.render(begin, prefix_end(t, id));
        auto sep = statement_sep(src, begin);
        std::string text;
        for (auto d : declarators(t, id)) {
            if (!text.empty()) text += sep;
            text += prefix + " " + cx.render(d) + ";";
        }
        cx.replace(id, text);
    }
    return sites.size();
}

// int a = 1; int b;  ->  int a = 1, b;
std::size_t merge_var_decl(RuleContext& cx) {
    const auto& t = cx.tree();
    const auto& an = cx.an;
    std::vector<std::vector<NodeId>> runs;
    for (auto list : statement_lists(an)) {
        std::vector<NodeId> run;
        auto flush = [&] {
            if (run.size() >= 2) runs.push_back(run);
            run.clear();
        };
        for (auto s : statements_of(an, list)) {
            // `var` admits a single declarator only.
            bool ok = s != kNoNode && t.node(s).kind == NodeKind::LocalVarDecl &&
                      an.compact(t.child_of_kind(s, NodeKind::Type)) != "var";
            if (ok && !run.empty() &&
                (compact_prefix(an, s) != compact_prefix(an, run.back()) ||
                 has_comment(t, t.node(s).first_token, t.node(s).first_token + 1))) {
                flush();
            }
            if (ok) {
                run.push_back(s);
            } else {
                flush();
            }
        }
        flush();
    }
    if (cx.out == nullptr) return runs.size();
    for (const auto& run : runs) {
        auto begin = t.span(run.front()).begin;
        std::string text = cx.render(begin, prefix_end(t, run.front())) + " ";
        bool first = true;
        for (auto s : run) {
            for (auto d : declarators(t, s)) {
                if (!first) text += ", ";
                text += cx.render(d);
                first = false;
            }
        }
        cx.out->replace(begin, t.span(run.back()).end, text + ";");
    }
    return runs.size();
}

// Two adjacent independent statements swap places.
std::size_t swap_statement(RuleContext& cx) {
    const auto& t = cx.tree();
    struct Effects {
        std::set<std::string_view> writes, reads;
    };
    auto effects = [&](NodeId s, Effects& fx) {
        auto k = t.node(s).kind;
        if (k == NodeKind::LocalVarDecl) {
            for (auto d : declarators(t, s)) {
                fx.writes.insert(t.first_own_token_text(d));
                auto init = t.child(d, 0);
                if (init == kNoNode) continue;
                if (!is_pure(t, init)) return false;
                names_in(t, init, fx.reads);
            }
            return true;
        }
        // A fragment's trailing expression has no semicolon to travel with it.
        if (k != NodeKind::ExprStmt || !t.has_own_token(s, ";")) return false;
        auto e = t.child(s, 0);
        auto ek = t.node(e).kind;
        if (ek == NodeKind::PrefixExpr || ek == NodeKind::PostfixExpr) {
            auto op = t.first_own_token_text(e);
            auto x = t.child(e, 0);
            if ((op != "++" && op != "--") || t.node(x).kind != NodeKind::NameExpr) return false;
            fx.writes.insert(t.first_own_token_text(x));
            fx.reads.insert(t.first_own_token_text(x));
            return true;
        }
        if (ek != NodeKind::AssignExpr) return false;
        auto op = t.first_own_token_text(e);
        auto x = t.child(e, 0);
        auto rhs = t.child(e, 1);
        if (op == "/=" || op == "%=" || t.node(x).kind != NodeKind::NameExpr || !is_pure(t, rhs)) {
            return false;
        }
        fx.writes.insert(t.first_own_token_text(x));
        if (op != "=") fx.reads.insert(t.first_own_token_text(x));
        names_in(t, rhs, fx.reads);
        return true;
    };
    auto disjoint = [](const std::set<std::string_view>& a, const std::set<std::string_view>& b) {
        for (auto x : a) {
            if (b.count(x) != 0) return false;
        }
        return true;
    };
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (auto list : statement_lists(cx.an)) {
        auto stmts = statements_of(cx.an, list);
        for (std::size_t i = 0; i + 1 < stmts.size(); ++i) {
            if (stmts[i] == kNoNode || stmts[i + 1] == kNoNode) continue;
            Effects a, b;
            if (!effects(stmts[i], a) || !effects(stmts[i + 1], b)) continue;
            if (!disjoint(a.writes, b.reads) || !disjoint(b.writes, a.reads) ||
                !disjoint(a.writes, b.writes)) {
                continue;
            }
            auto first = t.node(stmts[i + 1]).first_token;
            if (has_comment(t, first, first + 1)) continue;
            pairs.emplace_back(stmts[i], stmts[i + 1]);
            ++i;
        }
    }
    if (cx.out == nullptr) return pairs.size();
    for (auto [a, b] : pairs) {
        auto ta = cx.render(a);
        auto tb = cx.render(b);
        cx.replace(a, tb);
        cx.replace(b, ta);
    }
    return pairs.size();
}

// T x = a + b + c;  ->  T t = a + b; T x = t + c;
std::size_t infix_dividing(RuleContext& cx) {
    const auto& t = cx.tree();
    const auto& an = cx.an;
    std::vector<NodeId> sites;
    for (auto id : nodes_of(an, NodeKind::LocalVarDecl)) {
        if (!in_block_position(t, id)) continue;
        auto ds = declarators(t, id);
        if (ds.size() != 1 || t.own_tokens(ds[0]).size() != 2) continue;
        auto type = an.compact(t.child_of_kind(id, NodeKind::Type));
        if (!is_primitive(type) && type != "String") continue;
        auto init = t.child(ds[0], 0);
        if (init == kNoNode || t.node(init).kind != NodeKind::BinaryExpr) continue;
        // A constant initializer would stop being a compile-time constant.
        if (only_literals(t, init)) continue;
        auto left = t.child(init, 0);
        if (t.node(left).kind != NodeKind::BinaryExpr || an.type_of(left) != type) continue;
        sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    auto src = cx.src();
    for (auto id : sites) {
        auto begin = t.span(id).begin;
        auto left = t.child(t.child(declarators(t, id)[0], 0), 0);
        auto type = an.compact(t.child_of_kind(id, NodeKind::Type));
        auto name = cx.fresh->next();
        auto hoisted = type + " " + name + " = " + cx.render(left) + ";";
        cx.replace(left, name);
        cx.out->insert(begin, hoisted + statement_sep(src, begin));
    }
    return sites.size();
}

// y = x++;  ->  y = x; x = x + 1;
// y = ++x;  ->  x = x + 1; y = x;
std::size_t divide_pre_post_fix(RuleContext& cx) {
    const auto& t = cx.tree();
    const auto& an = cx.an;
    struct Site {
        NodeId stmt;
        std::string head;  // text up to and including the assigned name
        NodeId step;       // the ++/-- expression
    };
    auto step_of = [&](NodeId e, std::string_view target) -> NodeId {
        auto k = t.node(e).kind;
        if (k != NodeKind::PrefixExpr && k != NodeKind::PostfixExpr) return kNoNode;
        auto op = t.first_own_token_text(e);
        auto x = t.child(e, 0);
        if ((op != "++" && op != "--") || !an.is_simple_name(x) || an.name_of(x) == target) {
            return kNoNode;
        }
        auto type = an.local_type(x);
        return type == "int" || type == "long" ? e : kNoNode;
    };
    std::vector<NodeId> sites;
    for (NodeId id = 0; id < t.nodes().size(); ++id) {
        if (an.tainted(id)) continue;
        auto k = t.node(id).kind;
        if (k == NodeKind::ExprStmt) {
            auto e = t.child(id, 0);
            if (t.node(e).kind != NodeKind::AssignExpr || t.first_own_token_text(e) != "=") continue;
            auto y = t.child(e, 0);
            if (an.is_simple_name(y) && step_of(t.child(e, 1), an.name_of(y)) != kNoNode) {
                sites.push_back(id);
            }
        } else if (k == NodeKind::LocalVarDecl && in_block_position(t, id)) {
            auto ds = declarators(t, id);
            if (ds.size() != 1 || t.child(ds[0], 0) == kNoNode) continue;
            if (step_of(t.child(ds[0], 0), t.first_own_token_text(ds[0])) != kNoNode) sites.push_back(id);
        }
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    auto src = cx.src();
    for (auto id : sites) {
        auto begin = t.span(id).begin;
        NodeId step;
        std::string head;
        if (t.node(id).kind == NodeKind::ExprStmt) {
            auto e = t.child(id, 0);
            head = cx.render(t.child(e, 0));
            step = t.child(e, 1);
        } else {
            auto d = declarators(t, id)[0];
            head = cx.render(begin, t.token(t.node(d).first_token).end);
            step = t.child(d, 0);
        }
        auto x = std::string(an.name_of(t.child(step, 0)));
        auto bump = x + " = " + x + (t.first_own_token_text(step) == "++" ? " + 1;" : " - 1;");
        auto assign = head + " = " + x + ";";
        auto sep = statement_sep(src, begin);
        auto text = t.node(step).kind == NodeKind::PostfixExpr ? assign + sep + bump : bump + sep + assign;
        cx.replace(id, in_block_position(t, id) ? text : braced(src, begin, text));
    }
    return sites.size();
}

}  // namespace sect::transform

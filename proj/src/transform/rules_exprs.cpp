#include <optional>

#include "sect/java/lexer.hpp"
#include "transform/rule_impl.hpp"

namespace sect::transform {

using java::is_statement;
using java::kNoNode;
using java::TokenKind;

namespace {

// Value of an int or long literal; nullopt when it does not fit 64 bits.
std::optional<std::uint64_t> literal_value(std::string_view text) {
    std::string digits;
    for (char c : text) {
        if (c != '_') digits.push_back(c);
    }
    if (!digits.empty() && (digits.back() == 'l' || digits.back() == 'L')) digits.pop_back();
    int base = 10;
    std::size_t start = 0;
    if (digits.size() > 1 && digits[0] == '0') {
        char p = digits[1];
        if (p == 'x' || p == 'X') {
            base = 16;
            start = 2;
        } else if (p == 'b' || p == 'B') {
            base = 2;
            start = 2;
        } else {
            base = 8;
            start = 1;
        }
    }
    if (start >= digits.size()) return std::nullopt;
    std::uint64_t v = 0;
    for (auto i = start; i < digits.size(); ++i) {
        char c = digits[i];
        int d = c >= '0' && c <= '9' ? c - '0' : c >= 'a' && c <= 'f' ? c - 'a' + 10 : c >= 'A' && c <= 'F' ? c - 'A' + 10 : 99;
        if (d >= base) return std::nullopt;
        if (v > (UINT64_MAX - static_cast<std::uint64_t>(d)) / static_cast<std::uint64_t>(base)) return std::nullopt;
        v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(d);
    }
    return v;
}

bool inside_kind(const SyntaxTree& t, NodeId id, NodeKind kind) {
    for (auto p = t.parent(id); p != kNoNode; p = t.parent(p)) {
        auto k = t.node(p).kind;
        if (k == kind) return true;
        if (is_statement(k) || k == NodeKind::ClassBody) return false;
    }
    return false;
}

std::size_t swap_operands(RuleContext& cx, bool (*matches)(std::string_view), std::string_view (*mirror)(std::string_view)) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::BinaryExpr)) {
        if (!matches(t.first_own_token_text(id))) continue;
        if (is_pure(t, t.child(id, 0)) && is_pure(t, t.child(id, 1))) sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    for (auto id : sites) {
        auto l = t.child(id, 0);
        auto r = t.child(id, 1);
        auto op = mirror(t.first_own_token_text(id));
        auto text = cx.render(r) + " " + std::string(op) + " " +
                    paren_if(precedence(t, l) <= precedence(t, id), cx.render(l));
        cx.replace(id, text);
    }
    return sites.size();
}

}  // namespace

// x++;  ->  x += 1;
std::size_t unary_to_add(RuleContext& cx) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto kind : {NodeKind::PostfixExpr, NodeKind::PrefixExpr}) {
        for (auto id : nodes_of(cx.an, kind)) {
            auto op = t.first_own_token_text(id);
            auto pk = t.node(t.parent(id)).kind;
            if ((op == "++" || op == "--") && (pk == NodeKind::ExprStmt || pk == NodeKind::ForUpdate)) {
                sites.push_back(id);
            }
        }
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    for (auto id : sites) {
        auto op = t.first_own_token_text(id) == "++" ? " += 1" : " -= 1";
        cx.replace(id, cx.render(t.child(id, 0)) + op);
    }
    return sites.size();
}

// x += e  ->  x = x + (e)
std::size_t add_assign_expand(RuleContext& cx) {
    const auto& t = cx.tree();
    const auto& an = cx.an;
    // Without the implicit narrowing of `+=` the plain form must still type-check.
    auto fits = [&](std::string_view target, std::string_view e) {
        if (target == "String") return true;
        if (target == "int") return is_int_family(e);
        if (target == "long") return is_int_family(e) || e == "long";
        if (target == "float") return is_int_family(e) || e == "long" || e == "float";
        if (target == "double") return is_numeric(e);
        return false;
    };
    std::vector<NodeId> sites;
    for (auto id : nodes_of(an, NodeKind::AssignExpr)) {
        if (t.first_own_token_text(id) != "+=") continue;
        auto x = t.child(id, 0);
        if (!an.is_simple_name(x) || !fits(an.local_type(x), an.type_of(t.child(id, 1)))) continue;
        sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    for (auto id : sites) {
        auto x = cx.render(t.child(id, 0));
        auto e = t.child(id, 1);
        cx.replace(id, x + " = " + x + " + " + paren_if(precedence(t, e) <= 11, cx.render(e)));
    }
    return sites.size();
}

// n  ->  (n - 1) + 1
std::size_t modify_constant(RuleContext& cx) {
    const auto& t = cx.tree();
    std::vector<NodeId> sites;
    for (auto id : nodes_of(cx.an, NodeKind::Literal)) {
        auto tok = t.token(t.node(id).first_token);
        if (tok.kind != TokenKind::IntLiteral && tok.kind != TokenKind::LongLiteral) continue;
        auto v = literal_value(t.token_text(t.node(id).first_token));
        std::uint64_t limit = tok.kind == TokenKind::IntLiteral ? 0x7fffffffULL : 0x7fffffffffffffffULL;
        if (!v || *v >= limit) continue;
        if (inside_kind(t, id, NodeKind::DimExpr) || inside_kind(t, id, NodeKind::SwitchLabel) ||
            inside_kind(t, id, NodeKind::Annotation) || t.node(t.parent(id)).kind == NodeKind::Annotation) {
            continue;
        }
        sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    for (auto id : sites) {
        auto n = std::string(t.text(id));
        auto pk = t.node(t.parent(id)).kind;
        bool wrap = pk == NodeKind::BinaryExpr || pk == NodeKind::PrefixExpr || pk == NodeKind::PostfixExpr ||
                    pk == NodeKind::CastExpr || pk == NodeKind::InstanceOfExpr;
        cx.replace(id, paren_if(wrap, "(" + n + " - 1) + 1"));
    }
    return sites.size();
}

// a == b  ->  b == a
std::size_t swap_equal_exp(RuleContext& cx) {
    return swap_operands(
        cx, [](std::string_view op) { return op == "==" || op == "!="; },
        [](std::string_view op) { return op; });
}

// a < b  ->  b > a
std::size_t swap_relation(RuleContext& cx) {
    return swap_operands(
        cx, [](std::string_view op) { return op == "<" || op == ">" || op == "<=" || op == ">="; },
        [](std::string_view op) -> std::string_view {
            if (op == "<") return ">";
            if (op == ">") return "<";
            if (op == "<=") return ">=";
            return "<=";
        });
}

// s.equals("lit")  ->  "lit".equals(s)
std::size_t swap_string_equal(RuleContext& cx) {
    const auto& t = cx.tree();
    const auto& an = cx.an;
    std::vector<NodeId> sites;
    for (auto id : nodes_of(an, NodeKind::MethodCall)) {
        if (t.children(id).size() != 2 || t.first_own_token_text(id) != ".") continue;
        auto own = t.own_tokens(id);
        if (own.size() != 2 || t.token_text(own[1]) != "equals") continue;
        auto recv = t.child(id, 0);
        auto args = t.children(t.child(id, 1));
        if (args.size() != 1 || t.node(args[0]).kind != NodeKind::Literal ||
            t.token(t.node(args[0]).first_token).kind != TokenKind::StringLiteral) {
            continue;
        }
        if (t.node(recv).kind == NodeKind::Literal || an.type_of(recv) != "String") continue;
        sites.push_back(id);
    }
    if (cx.out == nullptr) return sites.size();
    innermost_first(t, sites);
    for (auto id : sites) {
        auto recv = t.child(id, 0);
        auto lit = t.child(t.child(id, 1), 0);
        cx.replace(id, cx.render(lit) + ".equals(" + cx.render(recv) + ")");
    }
    return sites.size();
}

}  // namespace sect::transform

#include "transform/analysis.hpp"

#include <algorithm>

#include "sect/java/lexer.hpp"

namespace sect::transform {

using java::kNoNode;
using java::TokenKind;

namespace {

bool is_unit_kind(NodeKind k) {
    return k == NodeKind::MethodDecl || k == NodeKind::ConstructorDecl ||
           k == NodeKind::InitializerBlock;
}

bool is_member_kind(NodeKind k) {
    return is_unit_kind(k) || k == NodeKind::FieldDecl || k == NodeKind::EnumConstant;
}

int binary_rank(std::string_view op) {
    if (op == "||") return 3;
    if (op == "&&") return 4;
    if (op == "|") return 5;
    if (op == "^") return 6;
    if (op == "&") return 7;
    if (op == "==" || op == "!=") return 8;
    if (op == "<" || op == ">" || op == "<=" || op == ">=") return 9;
    if (op == "<<" || op == ">>" || op == ">>>") return 10;
    if (op == "+" || op == "-") return 11;
    return 12;
}

int numeric_rank(std::string_view t) {
    if (is_int_family(t)) return 0;
    if (t == "long") return 1;
    if (t == "float") return 2;
    if (t == "double") return 3;
    return -1;
}

std::string unary_promotion(std::string_view t) {
    if (is_int_family(t)) return "int";
    return std::string(t);
}

}  // namespace

Analysis::Analysis(const SyntaxTree& tree)
    : tree_(tree),
      unit_index_(tree.nodes().size(), -1),
      tainted_(tree.nodes().size(), false) {
    const auto n = tree.nodes().size();
    std::vector<std::uint32_t> errors(n, 0);
    for (auto id = static_cast<NodeId>(n); id-- > 0;) {
        if (tree.node(id).kind == NodeKind::Error) ++errors[id];
        if (id != 0) errors[tree.parent(id)] += errors[id];
    }
    // Statements directly in the compilation unit make it a unit of its own.
    bool fragment = false;
    for (auto c : tree.children(0)) fragment = fragment || java::is_statement(tree.node(c).kind);
    std::vector<bool> in_member(n, false);
    for (NodeId id = 0; id < n; ++id) {
        const auto& node = tree.node(id);
        bool member = is_member_kind(node.kind) ||
                      (id != 0 && node.parent == 0 && java::is_statement(node.kind));
        in_member[id] = member || (id != 0 && in_member[node.parent]);
        bool inherited = id != 0 && in_member[node.parent] && tainted_[node.parent];
        tainted_[id] = inherited || (member && errors[id] > 0) || node.kind == NodeKind::Error;
        if (id != 0) unit_index_[id] = unit_index_[node.parent];
        if (node.kind == NodeKind::ClassBody) unit_index_[id] = -1;
        if (is_unit_kind(node.kind) || (id == 0 && fragment)) {
            unit_index_[id] = static_cast<int>(units_.size());
            units_.push_back(Unit{id, {}, {}, {}});
        }
    }
    for (auto& u : units_) collect(u, u.node);
}

void Analysis::collect(Unit& unit, NodeId id) {
    const auto& t = tree_;
    for (auto child : t.children(id)) {
        const auto& c = t.node(child);
        auto cs = t.span(child);
        switch (c.kind) {
            case NodeKind::ClassBody:
                unit.nested_bodies.push_back(child);
                continue;
            case NodeKind::MethodDecl:
            case NodeKind::ConstructorDecl:
            case NodeKind::InitializerBlock:
                continue;  // a unit of its own
            case NodeKind::NameExpr:
                unit.names.push_back(child);
                break;
            case NodeKind::FormalParam: {
                auto owner = t.parent(child);
                auto name_tok = kNoNode;
                for (auto tok : t.own_tokens(child)) {
                    if (t.token(tok).kind == TokenKind::Identifier) name_tok = tok;
                }
                if (name_tok == kNoNode) break;
                auto type = declared_type(t.child_of_kind(child, NodeKind::Type), child);
                if (t.has_own_token(child, "...")) type += "[]";
                auto scope = t.span(unit.node);
                if (t.node(owner).kind == NodeKind::LambdaParams) {
                    scope = t.span(t.parent(owner));
                } else if (t.node(owner).kind == NodeKind::ForEachStmt) {
                    scope = t.span(owner);
                }
                bind(unit, child, name_tok, type, scope.begin, scope.end);
                break;
            }
            case NodeKind::LambdaParams:
                for (auto tok : t.own_tokens(child)) {
                    if (t.token(tok).kind != TokenKind::Identifier) continue;
                    auto scope = t.span(id);
                    bind(unit, child, tok, "", scope.begin, scope.end);
                }
                break;
            case NodeKind::CatchParam: {
                std::uint32_t name_tok = 0;
                for (auto tok : t.own_tokens(child)) {
                    if (t.token(tok).kind == TokenKind::Identifier) name_tok = tok;
                }
                std::string type;
                auto types = 0;
                for (auto g : t.children(child)) {
                    if (t.node(g).kind == NodeKind::Type) {
                        ++types;
                        type = compact(g);
                    }
                }
                if (types != 1) type.clear();
                auto scope = t.span(id);
                bind(unit, child, name_tok, type, scope.begin, scope.end);
                break;
            }
            case NodeKind::Resource: {
                auto toks = t.own_tokens(child);
                if (toks.empty() || t.token(toks[0]).kind != TokenKind::Identifier) break;
                auto type = declared_type(t.child_of_kind(child, NodeKind::Type), child);
                auto scope = t.span(t.parent(id));
                bind(unit, child, toks[0], type, cs.begin, scope.end);
                break;
            }
            case NodeKind::VarDeclarator: {
                if (c.kind == NodeKind::VarDeclarator && t.node(id).kind == NodeKind::LocalVarDecl) {
                    auto container = t.parent(id);
                    auto ck = t.node(container).kind;
                    if (ck == NodeKind::SwitchGroup || ck == NodeKind::ForInit) {
                        container = t.parent(container);
                    }
                    auto type = declared_type(t.child_of_kind(id, NodeKind::Type), child);
                    auto toks = t.own_tokens(child);
                    bind(unit, child, toks[0], type, cs.begin, t.span(container).end);
                }
                break;
            }
            default:
                break;
        }
        collect(unit, child);
    }
}

void Analysis::bind(Unit& unit, NodeId decl, std::uint32_t name_token, std::string type,
                    std::uint32_t scope_begin, std::uint32_t scope_end) {
    unit.bindings.push_back(Binding{std::string(tree_.token_text(name_token)), std::move(type),
                                    name_token, decl, scope_begin, scope_end});
}

std::string Analysis::declared_type(NodeId type_node, NodeId owner) const {
    if (type_node == kNoNode) return "";
    auto type = compact(type_node);
    for (auto tok : tree_.own_tokens(owner)) {
        if (tree_.token_text(tok) == "[") type += "[]";
    }
    return type;
}

std::string Analysis::compact(NodeId id) const {
    const auto& n = tree_.node(id);
    std::string out;
    for (auto i = n.first_token; i < n.end_token; ++i) out += tree_.token_text(i);
    return out;
}

const Unit* Analysis::unit_of(NodeId id) const {
    auto u = unit_index_[id];
    return u < 0 ? nullptr : &units_[static_cast<std::size_t>(u)];
}

const Binding* Analysis::resolve(NodeId name_expr) const {
    const auto* unit = unit_of(name_expr);
    if (unit == nullptr || tree_.node(name_expr).kind != NodeKind::NameExpr) return nullptr;
    auto name = name_of(name_expr);
    auto pos = tree_.span(name_expr).begin;
    const Binding* best = nullptr;
    for (const auto& b : unit->bindings) {
        if (b.name != name || pos < b.scope_begin || pos >= b.scope_end) continue;
        if (best == nullptr || b.scope_begin >= best->scope_begin) best = &b;
    }
    return best;
}

std::string Analysis::local_type(NodeId expr) const {
    const auto* b = resolve(expr);
    return b == nullptr ? "" : b->type;
}

std::string Analysis::type_of(NodeId expr) const {
    const auto& t = tree_;
    const auto& n = t.node(expr);
    switch (n.kind) {
        case NodeKind::Literal: {
            const auto& tok = t.token(n.first_token);
            switch (tok.kind) {
                case TokenKind::IntLiteral: return "int";
                case TokenKind::LongLiteral: return "long";
                case TokenKind::CharLiteral: return "char";
                case TokenKind::StringLiteral: return "String";
                case TokenKind::BooleanLiteral: return "boolean";
                case TokenKind::NullLiteral: return "null";
                case TokenKind::FloatLiteral: {
                    auto s = t.token_text(n.first_token);
                    return (s.back() == 'f' || s.back() == 'F') ? "float" : "double";
                }
                default: return "";
            }
        }
        case NodeKind::NameExpr:
            return local_type(expr);
        case NodeKind::ParenExpr:
            return type_of(t.child(expr, 0));
        case NodeKind::CastExpr:
            return compact(t.child_of_kind(expr, NodeKind::Type));
        case NodeKind::InstanceOfExpr:
            return "boolean";
        case NodeKind::AssignExpr:
            return type_of(t.child(expr, 0));
        case NodeKind::PostfixExpr:
            return type_of(t.child(expr, 0));
        case NodeKind::PrefixExpr: {
            auto op = t.first_own_token_text(expr);
            auto inner = type_of(t.child(expr, 0));
            if (op == "!") return "boolean";
            if (op == "++" || op == "--") return inner;
            return is_numeric(inner) ? unary_promotion(inner) : "";
        }
        case NodeKind::BinaryExpr: {
            auto op = t.first_own_token_text(expr);
            if (op == "&&" || op == "||" || op == "==" || op == "!=" || op == "<" || op == ">" ||
                op == "<=" || op == ">=") {
                return "boolean";
            }
            auto a = type_of(t.child(expr, 0));
            auto b = type_of(t.child(expr, 1));
            if (op == "+" && (a == "String" || b == "String")) return "String";
            if (op == "<<" || op == ">>" || op == ">>>") {
                return is_numeric(a) && is_numeric(b) ? unary_promotion(a) : "";
            }
            if ((op == "&" || op == "|" || op == "^") && a == "boolean" && b == "boolean") {
                return "boolean";
            }
            if (is_numeric(a) && is_numeric(b)) return binary_promotion(a, b);
            return "";
        }
        case NodeKind::CondExpr: {
            auto a = type_of(t.child(expr, 1));
            auto b = type_of(t.child(expr, 2));
            return a == b ? a : "";
        }
        case NodeKind::MethodCall: {
            auto recv = t.child(expr, 0);
            if (recv == kNoNode || t.node(recv).kind == NodeKind::Arguments) return "";
            auto name = t.token_text(t.own_tokens(expr).back());
            auto args = t.children(t.child_of_kind(expr, NodeKind::Arguments)).size();
            if (type_of(recv) != "String") return "";
            if (name == "length" && args == 0) return "int";
            if (name == "isEmpty" && args == 0) return "boolean";
            if (name == "equals" && args == 1) return "boolean";
            if (name == "charAt" && args == 1) return "char";
            return "";
        }
        case NodeKind::FieldAccess: {
            auto recv = type_of(t.child(expr, 0));
            auto name = t.token_text(t.own_tokens(expr).back());
            if (name == "length" && recv.ends_with("[]")) return "int";
            return "";
        }
        case NodeKind::ArrayAccess: {
            auto arr = type_of(t.child(expr, 0));
            if (arr.ends_with("[]")) return arr.substr(0, arr.size() - 2);
            return "";
        }
        default:
            return "";
    }
}

// ---- predicates -----------------------------------------------------------

bool in_block_position(const SyntaxTree& t, NodeId stmt) {
    auto k = t.node(t.parent(stmt)).kind;
    return k == NodeKind::Block || k == NodeKind::SwitchGroup || k == NodeKind::CompilationUnit;
}

bool is_loop(NodeKind k) {
    return k == NodeKind::ForStmt || k == NodeKind::ForEachStmt || k == NodeKind::WhileStmt ||
           k == NodeKind::DoStmt;
}

namespace {

template <typename Pred, typename Stop>
bool any_in(const SyntaxTree& t, NodeId id, Pred pred, Stop stop) {
    if (pred(id)) return true;
    for (auto c : t.children(id)) {
        auto k = t.node(c).kind;
        if (k == NodeKind::ClassBody || k == NodeKind::LambdaExpr) continue;
        if (stop(c)) continue;
        if (any_in(t, c, pred, stop)) return true;
    }
    return false;
}

bool unlabeled(const SyntaxTree& t, NodeId jump) {
    for (auto tok : t.own_tokens(jump)) {
        if (t.token(tok).kind == TokenKind::Identifier) return false;
    }
    return true;
}

}  // namespace

bool has_break_to(const SyntaxTree& t, NodeId body) {
    auto k = t.node(body).kind;
    if (is_loop(k) || k == NodeKind::SwitchStmt) return false;
    return any_in(
        t, body,
        [&](NodeId n) { return t.node(n).kind == NodeKind::BreakStmt && unlabeled(t, n); },
        [&](NodeId n) {
            auto k = t.node(n).kind;
            return is_loop(k) || k == NodeKind::SwitchStmt;
        });
}

bool has_continue_to(const SyntaxTree& t, NodeId body) {
    if (is_loop(t.node(body).kind)) return false;
    return any_in(
        t, body,
        [&](NodeId n) { return t.node(n).kind == NodeKind::ContinueStmt && unlabeled(t, n); },
        [&](NodeId n) { return is_loop(t.node(n).kind); });
}

bool is_labeled(const SyntaxTree& t, NodeId stmt) {
    return t.node(t.parent(stmt)).kind == NodeKind::LabeledStmt;
}

namespace {

bool is_true_literal(const SyntaxTree& t, NodeId e) {
    return e != kNoNode && t.node(e).kind == NodeKind::Literal && t.text(e) == "true";
}

bool any_break_to_label(const SyntaxTree& t, NodeId loop) {
    auto parent = t.parent(loop);
    if (t.node(parent).kind != NodeKind::LabeledStmt) return false;
    auto label = t.first_own_token_text(parent);
    return any_in(
        t, loop,
        [&](NodeId n) {
            if (t.node(n).kind != NodeKind::BreakStmt) return false;
            for (auto tok : t.own_tokens(n)) {
                if (t.token(tok).kind == TokenKind::Identifier && t.token_text(tok) == label) {
                    return true;
                }
            }
            return false;
        },
        [](NodeId) { return false; });
}

}  // namespace

bool cannot_complete(const SyntaxTree& t, NodeId stmt) {
    const auto& n = t.node(stmt);
    switch (n.kind) {
        case NodeKind::ReturnStmt:
        case NodeKind::ThrowStmt:
        case NodeKind::BreakStmt:
        case NodeKind::ContinueStmt:
            return true;
        case NodeKind::Block:
        case NodeKind::SyncStmt: {
            auto block = n.kind == NodeKind::Block ? stmt : t.child_of_kind(stmt, NodeKind::Block);
            for (auto c : t.children(block)) {
                if (cannot_complete(t, c)) return true;
            }
            return false;
        }
        case NodeKind::LabeledStmt:
            return cannot_complete(t, t.child(stmt, 0)) &&
                   !any_in(
                       t, stmt, [&](NodeId x) { return t.node(x).kind == NodeKind::BreakStmt; },
                       [](NodeId) { return false; });
        case NodeKind::IfStmt: {
            auto kids = t.children(stmt);
            return kids.size() == 3 && cannot_complete(t, kids[1]) && cannot_complete(t, kids[2]);
        }
        case NodeKind::WhileStmt: {
            auto body = t.child(stmt, 1);
            return is_true_literal(t, t.child(stmt, 0)) && !has_break_to(t, body) &&
                   !any_break_to_label(t, stmt);
        }
        case NodeKind::DoStmt: {
            auto body = t.child(stmt, 0);
            if (has_break_to(t, body) || any_break_to_label(t, stmt)) return false;
            return is_true_literal(t, t.child(stmt, 1)) ||
                   (cannot_complete(t, body) && !has_continue_to(t, body));
        }
        case NodeKind::ForStmt: {
            auto cond = t.child_of_kind(stmt, NodeKind::ForCond);
            auto body = t.children(stmt).back();
            return t.children(cond).empty() && !has_break_to(t, body) &&
                   !any_break_to_label(t, stmt);
        }
        case NodeKind::TryStmt: {
            auto fin = t.child_of_kind(stmt, NodeKind::FinallyClause);
            if (fin != kNoNode && cannot_complete(t, t.child_of_kind(fin, NodeKind::Block))) {
                return true;
            }
            if (!cannot_complete(t, t.child_of_kind(stmt, NodeKind::Block))) return false;
            for (auto c : t.children(stmt)) {
                if (t.node(c).kind == NodeKind::CatchClause &&
                    !cannot_complete(t, t.child_of_kind(c, NodeKind::Block))) {
                    return false;
                }
            }
            return true;
        }
        case NodeKind::SwitchStmt: {
            auto kids = t.children(stmt);
            bool has_default = false;
            for (std::size_t i = 1; i < kids.size(); ++i) {
                for (auto l : t.children(kids[i])) {
                    if (t.node(l).kind == NodeKind::SwitchLabel && t.has_own_token(l, "default")) {
                        has_default = true;
                    }
                }
            }
            if (!has_default || kids.size() < 2) return false;
            for (std::size_t i = 1; i < kids.size(); ++i) {
                if (has_break_to(t, kids[i])) return false;
            }
            auto last = t.children(kids.back());
            return !last.empty() && t.node(last.back()).kind != NodeKind::SwitchLabel &&
                   cannot_complete(t, last.back());
        }
        default:
            return false;
    }
}

bool is_pure(const SyntaxTree& t, NodeId expr) {
    const auto& n = t.node(expr);
    switch (n.kind) {
        case NodeKind::NameExpr:
        case NodeKind::Literal:
            return true;
        case NodeKind::ParenExpr:
            return is_pure(t, t.child(expr, 0));
        case NodeKind::PrefixExpr: {
            auto op = t.first_own_token_text(expr);
            return (op == "-" || op == "+" || op == "!" || op == "~") && is_pure(t, t.child(expr, 0));
        }
        case NodeKind::BinaryExpr: {
            auto op = t.first_own_token_text(expr);
            return op != "/" && op != "%" && is_pure(t, t.child(expr, 0)) &&
                   is_pure(t, t.child(expr, 1));
        }
        default:
            return false;
    }
}

int precedence(const SyntaxTree& t, NodeId expr) {
    switch (t.node(expr).kind) {
        case NodeKind::AssignExpr:
        case NodeKind::LambdaExpr:
            return 1;
        case NodeKind::CondExpr:
            return 2;
        case NodeKind::BinaryExpr:
            return binary_rank(t.first_own_token_text(expr));
        case NodeKind::InstanceOfExpr:
            return 9;
        case NodeKind::PrefixExpr:
        case NodeKind::CastExpr:
            return 13;
        case NodeKind::PostfixExpr:
            return 14;
        default:
            return 15;
    }
}

bool has_comment(const SyntaxTree& t, std::uint32_t first_token, std::uint32_t end_token) {
    auto src = t.source();
    for (auto i = first_token; i < end_token && i < t.tokens().size(); ++i) {
        const auto& tok = t.token(i);
        auto trivia = src.substr(tok.trivia_begin, tok.begin - tok.trivia_begin);
        if (trivia.find("//") != std::string_view::npos || trivia.find("/*") != std::string_view::npos) {
            return true;
        }
    }
    return false;
}

// ---- numeric types ----------------------------------------------------------

bool is_int_family(std::string_view type) {
    return type == "int" || type == "short" || type == "byte" || type == "char";
}

bool is_numeric(std::string_view type) {
    return is_int_family(type) || type == "long" || type == "float" || type == "double";
}

std::string binary_promotion(std::string_view a, std::string_view b) {
    auto r = std::max(numeric_rank(a), numeric_rank(b));
    switch (r) {
        case 3: return "double";
        case 2: return "float";
        case 1: return "long";
        default: return "int";
    }
}

bool conditional_preserves(std::string_view target, std::string_view a, std::string_view b) {
    if (target == "String") {
        auto ok = [](std::string_view x) { return x == "String" || x == "null"; };
        return ok(a) && ok(b);
    }
    if (target == "boolean") return a == "boolean" && b == "boolean";
    if (target != "int" && target != "long" && target != "float" && target != "double") {
        return false;
    }
    if (!is_numeric(a) || !is_numeric(b)) return false;
    auto promoted = binary_promotion(a, b);
    if (numeric_rank(promoted) > numeric_rank(target)) return false;
    // Routing an integer through float rounds differently from widening to double.
    if (promoted == "float" && target == "double") return a == "float" && b == "float";
    return true;
}

// ---- layout -------------------------------------------------------------

bool starts_line(std::string_view src, std::uint32_t pos) {
    while (pos > 0) {
        char c = src[pos - 1];
        if (c == '\n') return true;
        if (c != ' ' && c != '\t') return false;
        --pos;
    }
    // A one-line source keeps every rewrite on that line.
    return src.find('\n') != std::string_view::npos;
}

std::string line_indent(std::string_view src, std::uint32_t pos) {
    std::size_t b = pos;
    while (b > 0 && src[b - 1] != '\n') --b;
    auto e = b;
    while (e < src.size() && (src[e] == ' ' || src[e] == '\t')) ++e;
    return std::string(src.substr(b, e - b));
}

std::string reindent(std::string_view text, int delta) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        out.push_back(text[i]);
        if (text[i] != '\n') continue;
        auto next = i + 1 < text.size() ? text[i + 1] : '\n';
        if (delta > 0) {
            if (next != '\n' && next != '\r') out.append(static_cast<std::size_t>(delta), ' ');
        } else {
            int k = 0;
            while (k < -delta && i + 1 < text.size() && text[i + 1] == ' ') {
                ++i;
                ++k;
            }
        }
    }
    return out;
}

std::string statement_sep(std::string_view src, std::uint32_t pos) {
    return starts_line(src, pos) ? "\n" + line_indent(src, pos) : " ";
}

std::string braced(std::string_view src, std::uint32_t pos, std::string_view body) {
    if (!starts_line(src, pos)) return "{ " + std::string(body) + " }";
    auto indent = line_indent(src, pos);
    return "{\n" + indent + "    " + reindent(body, 4) + "\n" + indent + "}";
}

// ---- fresh names -------------------------------------------------------------

FreshNames::FreshNames(const SyntaxTree& tree, std::uint64_t seed) : rng_(seed) {
    for (std::uint32_t i = 0; i < tree.tokens().size(); ++i) {
        if (tree.token(i).kind == TokenKind::Identifier) taken_.emplace(tree.token_text(i));
    }
}

std::string FreshNames::next() {
    static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    while (true) {
        auto draw = rng_();
        std::string digits;
        do {
            digits.push_back(kDigits[draw % 36]);
            draw /= 36;
        } while (draw != 0);
        std::reverse(digits.begin(), digits.end());
        auto name = "v_" + digits;
        if (taken_.insert(name).second) return name;
    }
}

}  // namespace sect::transform

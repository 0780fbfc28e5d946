#include "sect/equiv/interpreter.hpp"

#include <limits>

#include "sect/error.hpp"

namespace sect::equiv {

using java::NodeId;
using java::NodeKind;
using java::SyntaxTree;
using java::TokenKind;

namespace {

// Allocation caps; beyond these a snippet is outside what we model.
constexpr std::int64_t kMaxArray = 1 << 20;
constexpr std::size_t kMaxString = 1 << 20;

struct TrapSignal {
    Trap trap;
};

[[noreturn]] void raise(Trap t) { throw TrapSignal{t}; }
[[noreturn]] void unsupported() { raise(Trap::Unsupported); }

using Array = std::shared_ptr<std::vector<std::int32_t>>;

// Runtime value. Int, Long and Boolean live in `n`; an Int is kept
// sign-extended so comparisons need no case split.
struct RV {
    JType t = JType::Int;
    std::int64_t n = 0;
    std::string s;
    Array a;
};

RV make_int(std::int64_t v) { return {JType::Int, static_cast<std::int32_t>(static_cast<std::uint32_t>(v)), {}, {}}; }
RV make_long(std::int64_t v) { return {JType::Long, v, {}, {}}; }
RV make_bool(bool v) { return {JType::Boolean, v ? 1 : 0, {}, {}}; }
RV make_string(std::string v) {
    if (v.size() > kMaxString) unsupported();
    return {JType::String, 0, std::move(v), {}};
}

bool numeric(JType t) { return t == JType::Int || t == JType::Long; }

std::int64_t wrap_to(JType t, std::uint64_t bits) {
    if (t == JType::Int) return static_cast<std::int32_t>(static_cast<std::uint32_t>(bits));
    return static_cast<std::int64_t>(bits);
}

// Assignment conversion into a declared type.
RV coerce(RV v, JType to) {
    if (v.t == to) return v;
    if (to == JType::Long && v.t == JType::Int) return make_long(v.n);
    unsupported();
}

// Numeric cast, which may narrow.
RV cast_to(RV v, JType to) {
    if (v.t == to) return v;
    if (!numeric(v.t) || !numeric(to)) unsupported();
    return to == JType::Int ? make_int(v.n) : make_long(v.n);
}

std::string stringify(const RV& v) {
    switch (v.t) {
        case JType::Int:
        case JType::Long:
            return std::to_string(v.n);
        case JType::Boolean:
            return v.n ? "true" : "false";
        case JType::String:
            return v.s;
        case JType::IntArray:
            break;
    }
    unsupported();  // identity hash codes are not modelled
}

// Java's String.length() counts UTF-16 code units.
std::int64_t utf16_length(std::string_view s) {
    std::int64_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) n += c >= 0xF0 ? 2 : 1;
    }
    return n;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

std::string decode_string(std::string_view lit) {
    if (lit.size() < 2 || lit.front() != '"' || lit.back() != '"') unsupported();
    lit = lit.substr(1, lit.size() - 2);
    std::string out;
    for (std::size_t i = 0; i < lit.size(); ++i) {
        char c = lit[i];
        if (c != '\\') {
            out += c;
            continue;
        }
        if (++i >= lit.size()) unsupported();
        c = lit[i];
        switch (c) {
            case 'b': out += '\b'; break;
            case 't': out += '\t'; break;
            case 'n': out += '\n'; break;
            case 'f': out += '\f'; break;
            case 'r': out += '\r'; break;
            case 's': out += ' '; break;
            case '"': case '\'': case '\\': out += c; break;
            case 'u': {
                while (i < lit.size() && lit[i] == 'u') ++i;
                if (i + 4 > lit.size()) unsupported();
                std::uint32_t cp = 0;
                for (int k = 0; k < 4; ++k, ++i) {
                    char h = lit[i];
                    int d = h >= '0' && h <= '9' ? h - '0' : h >= 'a' && h <= 'f' ? h - 'a' + 10
                                                          : h >= 'A' && h <= 'F' ? h - 'A' + 10 : -1;
                    if (d < 0) unsupported();
                    cp = cp * 16 + static_cast<std::uint32_t>(d);
                }
                --i;
                if (cp >= 0xD800 && cp < 0xE000) unsupported();  // lone surrogate halves
                append_utf8(out, cp);
                break;
            }
            default: {
                if (c < '0' || c > '7') unsupported();
                // octal escape: up to three digits, at most \377
                std::uint32_t v = 0;
                int max_digits = c <= '3' ? 3 : 2;
                int k = 0;
                while (k < max_digits && i < lit.size() && lit[i] >= '0' && lit[i] <= '7') {
                    v = v * 8 + static_cast<std::uint32_t>(lit[i] - '0');
                    ++i;
                    ++k;
                }
                --i;
                append_utf8(out, v);
            }
        }
    }
    return out;
}

// Magnitude of an integer literal and whether it was written in decimal.
struct IntLit {
    std::uint64_t value;
    bool decimal;
};

IntLit parse_int_literal(std::string_view text, bool is_long) {
    std::string digits;
    for (char c : text) {
        if (c != '_') digits += c;
    }
    if (is_long) digits.pop_back();  // L suffix
    unsigned base = 10;
    std::size_t i = 0;
    if (digits.size() > 1 && digits[0] == '0') {
        if (digits[1] == 'x' || digits[1] == 'X') {
            base = 16;
            i = 2;
        } else if (digits[1] == 'b' || digits[1] == 'B') {
            base = 2;
            i = 2;
        } else {
            base = 8;
            i = 1;
        }
    }
    if (i >= digits.size()) unsupported();
    std::uint64_t v = 0;
    for (; i < digits.size(); ++i) {
        char c = digits[i];
        unsigned d = c >= '0' && c <= '9' ? static_cast<unsigned>(c - '0')
                     : c >= 'a' && c <= 'f' ? static_cast<unsigned>(c - 'a' + 10)
                     : c >= 'A' && c <= 'F' ? static_cast<unsigned>(c - 'A' + 10) : 99;
        if (d >= base) unsupported();
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / base) unsupported();
        v = v * base + d;
    }
    return {v, base == 10};
}

enum class Flow { Normal, Break, Continue, Return };

struct Slot {
    std::string_view name;
    JType type;
    bool assigned;
    RV v;
};

// Where an assignment lands.
struct LRef {
    std::size_t slot = 0;
    Array arr;
    std::int64_t index = 0;
    bool is_element = false;
};

class Interp {
public:
    Interp(const SyntaxTree& t, const std::vector<std::vector<NodeId>>& kids, std::int64_t limit, JType ret)
        : t_(t), kids_(kids), limit_(limit), ret_type_(ret) {}

    void bind(std::string_view name, RV v) { env_.push_back({name, v.t, true, std::move(v)}); }

    RV call(NodeId body) {
        if (exec(body) != Flow::Return) unsupported();  // falling off a non-void method
        return std::move(*ret_);
    }

private:
    const SyntaxTree& t_;
    const std::vector<std::vector<NodeId>>& kids_;  // child nodes, precomputed per program
    std::int64_t limit_;
    std::int64_t steps_ = 0;
    JType ret_type_;
    std::vector<Slot> env_;
    std::optional<RV> ret_;
    std::string_view flow_label_;

    void tick() {
        if (++steps_ > limit_) raise(Trap::StepLimit);
    }

    NodeKind kind(NodeId id) const { return t_.node(id).kind; }
    std::string_view op(NodeId id) const { return t_.first_own_token_text(id); }

    std::string compact(NodeId id) const {
        std::string out;
        const auto& n = t_.node(id);
        for (auto i = n.first_token; i < n.end_token; ++i) out += t_.token_text(i);
        return out;
    }

    JType declared_type(NodeId type_node, std::size_t extra_dims) const {
        auto text = compact(type_node);
        for (std::size_t i = 0; i < extra_dims; ++i) text += "[]";
        auto t = parse_type(text);
        if (!t) unsupported();
        return *t;
    }

    std::size_t find(std::string_view name) const {
        for (std::size_t i = env_.size(); i-- > 0;) {
            if (env_[i].name == name) return i;
        }
        unsupported();  // fields, outer names and the like
    }

    // ---- statements ---------------------------------------------------------

    Flow exec(NodeId s) {
        tick();
        const auto& ch = kids_[s];
        switch (kind(s)) {
            case NodeKind::Block: {
                auto mark = env_.size();
                Flow f = Flow::Normal;
                for (auto c : ch) {
                    f = exec(c);
                    if (f != Flow::Normal) break;
                }
                env_.resize(mark);
                return f;
            }
            case NodeKind::LocalVarDecl:
                declare(s);
                return Flow::Normal;
            case NodeKind::EmptyStmt:
                return Flow::Normal;
            case NodeKind::ExprStmt:
                if (!t_.has_own_token(s, ";")) unsupported();
                eval(ch.at(0));
                return Flow::Normal;
            case NodeKind::IfStmt:
                if (truth(ch.at(0))) return exec(ch.at(1));
                return ch.size() > 2 ? exec(ch[2]) : Flow::Normal;
            case NodeKind::WhileStmt:
            case NodeKind::DoStmt:
            case NodeKind::ForStmt:
                return loop(s, {});
            case NodeKind::LabeledStmt: {
                auto label = op(s);
                auto body = ch.at(0);
                auto k = kind(body);
                Flow f = k == NodeKind::WhileStmt || k == NodeKind::DoStmt || k == NodeKind::ForStmt
                             ? loop(body, label)
                             : exec(body);
                if (f == Flow::Break && flow_label_ == label) {
                    flow_label_ = {};
                    return Flow::Normal;
                }
                return f;
            }
            case NodeKind::SwitchStmt:
                return switch_stmt(s);
            case NodeKind::BreakStmt:
            case NodeKind::ContinueStmt: {
                auto own = t_.own_tokens(s);
                flow_label_ = own.size() == 3 ? t_.token_text(own[1]) : std::string_view{};
                return kind(s) == NodeKind::BreakStmt ? Flow::Break : Flow::Continue;
            }
            case NodeKind::ReturnStmt:
                if (ch.empty()) unsupported();
                ret_ = coerce(eval(ch[0]), ret_type_);
                return Flow::Return;
            default:
                unsupported();
        }
    }

    void declare(NodeId decl) {
        auto type = t_.child_of_kind(decl, NodeKind::Type);
        if (type == kNoNode()) unsupported();
        for (auto d : kids_[decl]) {
            if (kind(d) != NodeKind::VarDeclarator) continue;
            std::size_t dims = 0;
            for (auto tok : t_.own_tokens(d)) dims += t_.token_text(tok) == "[";
            auto jt = declared_type(type, dims);
            auto name = t_.token_text(t_.own_tokens(d).at(0));
            auto init = t_.child(d, 0);
            if (init == kNoNode()) {
                env_.push_back({name, jt, false, {}});
                continue;
            }
            RV v = kind(init) == NodeKind::ArrayInit ? array_init(init, jt) : coerce(eval(init), jt);
            env_.push_back({name, jt, true, std::move(v)});
        }
    }

    static constexpr NodeId kNoNode() { return java::kNoNode; }

    // Runs one loop body; false ends the loop with `out` as its result.
    bool body_continues(NodeId body, std::string_view label, Flow& out) {
        Flow f = exec(body);
        switch (f) {
            case Flow::Normal:
                return true;
            case Flow::Continue:
                if (flow_label_.empty() || flow_label_ == label) {
                    flow_label_ = {};
                    return true;
                }
                out = f;
                return false;
            case Flow::Break:
                if (flow_label_.empty()) {
                    out = Flow::Normal;
                } else {
                    out = f;
                }
                return false;
            case Flow::Return:
                out = f;
                return false;
        }
        return false;
    }

    Flow loop(NodeId s, std::string_view label) {
        const auto& ch = kids_[s];
        Flow out = Flow::Normal;
        switch (kind(s)) {
            case NodeKind::WhileStmt:
                while (true) {
                    tick();
                    if (!truth(ch.at(0)) || !body_continues(ch.at(1), label, out)) break;
                }
                return out;
            case NodeKind::DoStmt:
                while (true) {
                    tick();
                    if (!body_continues(ch.at(0), label, out) || !truth(ch.at(1))) break;
                }
                return out;
            default:
                break;
        }
        // for (init; cond; update) body
        auto mark = env_.size();
        auto init = ch.at(0), cond = ch.at(1), update = ch.at(2), body = ch.at(3);
        for (auto c : kids_.at(init)) {
            if (kind(c) == NodeKind::LocalVarDecl) {
                declare(c);
            } else {
                eval(c);
            }
        }
        while (true) {
            tick();
            auto c = t_.child(cond, 0);
            if (c != kNoNode() && !truth(c)) break;
            if (!body_continues(body, label, out)) break;
            for (auto u : kids_[update]) eval(u);
        }
        env_.resize(mark);
        return out;
    }

    Flow switch_stmt(NodeId s) {
        const auto& ch = kids_[s];
        RV key = eval(ch.at(0));
        if (key.t != JType::Int && key.t != JType::String) unsupported();
        std::size_t start = ch.size(), fallback = ch.size();
        for (std::size_t g = 1; g < ch.size() && start == ch.size(); ++g) {
            if (kind(ch[g]) != NodeKind::SwitchGroup) unsupported();
            for (auto label : kids_[ch[g]]) {
                if (kind(label) != NodeKind::SwitchLabel) continue;
                if (t_.has_own_token(label, "default")) {
                    fallback = g;
                    continue;
                }
                RV c = eval(t_.child(label, 0));
                if (c.t != key.t) unsupported();
                if (key.t == JType::Int ? c.n == key.n : c.s == key.s) {
                    start = g;
                    break;
                }
            }
        }
        if (start == ch.size()) start = fallback;
        auto mark = env_.size();
        Flow out = Flow::Normal;
        for (auto g = start; g < ch.size() && out == Flow::Normal; ++g) {
            for (auto st : kids_[ch[g]]) {
                if (kind(st) == NodeKind::SwitchLabel) continue;
                Flow f = exec(st);
                if (f == Flow::Break && flow_label_.empty()) {
                    out = Flow::Break;
                    break;
                }
                if (f != Flow::Normal) {
                    env_.resize(mark);
                    return f;
                }
            }
        }
        env_.resize(mark);
        return Flow::Normal;
    }

    // ---- expressions --------------------------------------------------------

    bool truth(NodeId e) {
        RV v = eval(e);
        if (v.t != JType::Boolean) unsupported();
        return v.n != 0;
    }

    std::int64_t integral(NodeId e) {
        RV v = eval(e);
        if (v.t != JType::Int) unsupported();
        return v.n;
    }

    RV array_init(NodeId init, JType type) {
        if (type != JType::IntArray) unsupported();
        auto arr = std::make_shared<std::vector<std::int32_t>>();
        for (auto c : kids_.at(init)) {
            if (kind(c) == NodeKind::ArrayInit) unsupported();
            arr->push_back(static_cast<std::int32_t>(coerce(eval(c), JType::Int).n));
        }
        return {JType::IntArray, 0, {}, arr};
    }

    RV literal(NodeId e, bool negated) {
        auto tok = t_.node(e).first_token;
        auto text = t_.token_text(tok);
        switch (t_.token(tok).kind) {
            case TokenKind::IntLiteral:
            case TokenKind::LongLiteral: {
                bool is_long = t_.token(tok).kind == TokenKind::LongLiteral;
                auto lit = parse_int_literal(text, is_long);
                std::uint64_t max_signed = is_long ? 0x7FFFFFFFFFFFFFFFull : 0x7FFFFFFFull;
                std::uint64_t max_bits = is_long ? ~0ull : 0xFFFFFFFFull;
                // The decimal literal one past the maximum is legal only as the
                // operand of unary minus.
                bool ok = lit.decimal ? lit.value <= max_signed || (negated && lit.value == max_signed + 1)
                                      : lit.value <= max_bits;
                if (!ok) unsupported();
                std::uint64_t bits = negated ? 0 - lit.value : lit.value;
                return is_long ? make_long(wrap_to(JType::Long, bits)) : make_int(wrap_to(JType::Int, bits));
            }
            case TokenKind::StringLiteral:
                if (negated) unsupported();
                return make_string(decode_string(text));
            case TokenKind::BooleanLiteral:
                if (negated) unsupported();
                return make_bool(text == "true");
            default:
                unsupported();
        }
    }

    RV arith(std::string_view o, const RV& a, const RV& b) {
        if (o == "+" && (a.t == JType::String || b.t == JType::String)) return make_string(stringify(a) + stringify(b));
        if (o == "&&" || o == "||") unsupported();  // handled lazily by the caller
        if (a.t == JType::Boolean && b.t == JType::Boolean) {
            bool x = a.n != 0, y = b.n != 0;
            if (o == "&") return make_bool(x && y);
            if (o == "|") return make_bool(x || y);
            if (o == "^" || o == "!=") return make_bool(x != y);
            if (o == "==") return make_bool(x == y);
            unsupported();
        }
        if (!numeric(a.t) || !numeric(b.t)) unsupported();  // reference comparison and the like
        if (o == "<<" || o == ">>" || o == ">>>") {
            // Only the left operand's type matters for shifts.
            if (a.t == JType::Int) {
                auto d = static_cast<unsigned>(b.n & 31);
                auto x = static_cast<std::int32_t>(a.n);
                if (o == "<<") return make_int(static_cast<std::int64_t>(static_cast<std::uint32_t>(x) << d));
                if (o == ">>") return make_int(x >> d);
                return make_int(static_cast<std::int64_t>(static_cast<std::uint32_t>(x) >> d));
            }
            auto d = static_cast<unsigned>(b.n & 63);
            if (o == "<<") return make_long(wrap_to(JType::Long, static_cast<std::uint64_t>(a.n) << d));
            if (o == ">>") return make_long(a.n >> d);
            return make_long(static_cast<std::int64_t>(static_cast<std::uint64_t>(a.n) >> d));
        }
        JType t = a.t == JType::Long || b.t == JType::Long ? JType::Long : JType::Int;
        std::int64_t x = a.n, y = b.n;
        auto ux = static_cast<std::uint64_t>(x), uy = static_cast<std::uint64_t>(y);
        auto out = [&](std::uint64_t bits) { return t == JType::Int ? make_int(wrap_to(t, bits)) : make_long(wrap_to(t, bits)); };
        if (o == "+") return out(ux + uy);
        if (o == "-") return out(ux - uy);
        if (o == "*") return out(ux * uy);
        if (o == "/" || o == "%") {
            if (y == 0) raise(Trap::DivByZero);
            std::int64_t min = t == JType::Int ? std::numeric_limits<std::int32_t>::min()
                                               : std::numeric_limits<std::int64_t>::min();
            if (x == min && y == -1) return o == "/" ? out(static_cast<std::uint64_t>(min)) : out(0);
            return out(static_cast<std::uint64_t>(o == "/" ? x / y : x % y));
        }
        if (o == "&") return out(ux & uy);
        if (o == "|") return out(ux | uy);
        if (o == "^") return out(ux ^ uy);
        if (o == "<") return make_bool(x < y);
        if (o == ">") return make_bool(x > y);
        if (o == "<=") return make_bool(x <= y);
        if (o == ">=") return make_bool(x >= y);
        if (o == "==") return make_bool(x == y);
        if (o == "!=") return make_bool(x != y);
        unsupported();
    }

    LRef lvalue(NodeId e) {
        switch (kind(e)) {
            case NodeKind::ParenExpr:
                return lvalue(t_.child(e, 0));
            case NodeKind::NameExpr: {
                LRef r;
                r.slot = find(op(e));
                return r;
            }
            case NodeKind::ArrayAccess: {
                RV arr = eval(t_.child(e, 0));
                if (arr.t != JType::IntArray) unsupported();
                LRef r;
                r.is_element = true;
                r.arr = arr.a;
                r.index = integral(t_.child(e, 1));
                return r;
            }
            default:
                unsupported();
        }
    }

    void check_bounds(const LRef& r) {
        if (r.index < 0 || r.index >= static_cast<std::int64_t>(r.arr->size())) raise(Trap::IndexOutOfBounds);
    }

    RV load(const LRef& r) {
        if (r.is_element) {
            check_bounds(r);
            return make_int((*r.arr)[static_cast<std::size_t>(r.index)]);
        }
        const auto& slot = env_[r.slot];
        if (!slot.assigned) unsupported();
        return slot.v;
    }

    JType target_type(const LRef& r) const { return r.is_element ? JType::Int : env_[r.slot].type; }

    RV store(const LRef& r, RV v) {
        if (r.is_element) {
            check_bounds(r);
            (*r.arr)[static_cast<std::size_t>(r.index)] = static_cast<std::int32_t>(v.n);
        } else {
            env_[r.slot].v = v;
            env_[r.slot].assigned = true;
        }
        return v;
    }

    RV step(NodeId e, bool prefix) {
        auto o = op(e);
        auto r = lvalue(t_.child(e, 0));
        RV old = load(r);
        if (!numeric(old.t)) unsupported();
        RV one = make_int(1);
        RV now = cast_to(arith(o == "++" ? "+" : "-", old, one), target_type(r));
        store(r, now);
        return prefix ? now : old;
    }

    // Static type of an expression, needed where Java widens a branch that
    // was not evaluated.
    JType static_type(NodeId e) {
        const auto& ch = kids_[e];
        switch (kind(e)) {
            case NodeKind::ParenExpr:
                return static_type(ch.at(0));
            case NodeKind::Literal:
                switch (t_.token(t_.node(e).first_token).kind) {
                    case TokenKind::IntLiteral: return JType::Int;
                    case TokenKind::LongLiteral: return JType::Long;
                    case TokenKind::BooleanLiteral: return JType::Boolean;
                    case TokenKind::StringLiteral: return JType::String;
                    default: unsupported();
                }
            case NodeKind::NameExpr:
                return env_[find(op(e))].type;
            case NodeKind::AssignExpr:
                return static_type(ch.at(0));
            case NodeKind::CastExpr:
                return declared_type(ch.at(0), 0);
            case NodeKind::ArrayAccess:
                return JType::Int;
            case NodeKind::FieldAccess:
                return JType::Int;
            case NodeKind::NewArray:
                return JType::IntArray;
            case NodeKind::MethodCall: {
                auto own = t_.own_tokens(e);
                if (own.empty()) unsupported();
                auto name = t_.token_text(own.back());
                if (name == "length") return JType::Int;
                if (name == "equals" || name == "isEmpty") return JType::Boolean;
                unsupported();
            }
            case NodeKind::PrefixExpr:
                if (op(e) == "!") return JType::Boolean;
                return static_type(ch.at(0));
            case NodeKind::PostfixExpr:
                return static_type(ch.at(0));
            case NodeKind::CondExpr: {
                auto a = static_type(ch.at(1)), b = static_type(ch.at(2));
                if (a == b) return a;
                if (numeric(a) && numeric(b)) return JType::Long;
                unsupported();
            }
            case NodeKind::BinaryExpr: {
                auto o = op(e);
                if (o == "&&" || o == "||" || o == "<" || o == ">" || o == "<=" || o == ">=" || o == "==" ||
                    o == "!=") {
                    return JType::Boolean;
                }
                auto a = static_type(ch.at(0)), b = static_type(ch.at(1));
                if (o == "+" && (a == JType::String || b == JType::String)) return JType::String;
                if (o == "<<" || o == ">>" || o == ">>>") return a;
                if (a == JType::Boolean) return a;
                return a == JType::Long || b == JType::Long ? JType::Long : JType::Int;
            }
            default:
                unsupported();
        }
    }

    RV eval(NodeId e) {
        const auto& ch = kids_[e];
        switch (kind(e)) {
            case NodeKind::ParenExpr:
                return eval(ch.at(0));
            case NodeKind::Literal:
                return literal(e, false);
            case NodeKind::NameExpr: {
                const auto& slot = env_[find(op(e))];
                if (!slot.assigned) unsupported();
                return slot.v;
            }
            case NodeKind::BinaryExpr: {
                auto o = op(e);
                if (o == "&&") return make_bool(truth(ch.at(0)) && truth(ch.at(1)));
                if (o == "||") return make_bool(truth(ch.at(0)) || truth(ch.at(1)));
                RV a = eval(ch.at(0));
                RV b = eval(ch.at(1));
                return arith(o, a, b);
            }
            case NodeKind::PrefixExpr: {
                auto o = op(e);
                if (o == "++" || o == "--") return step(e, true);
                auto x = ch.at(0);
                if (o == "-" && kind(x) == NodeKind::Literal) {
                    auto k = t_.token(t_.node(x).first_token).kind;
                    if (k == TokenKind::IntLiteral || k == TokenKind::LongLiteral) return literal(x, true);
                }
                RV v = eval(x);
                if (o == "!") {
                    if (v.t != JType::Boolean) unsupported();
                    return make_bool(v.n == 0);
                }
                if (!numeric(v.t)) unsupported();
                if (o == "+") return v;
                auto bits = static_cast<std::uint64_t>(v.n);
                if (o == "-") bits = 0 - bits;
                else if (o == "~") bits = ~bits;
                else unsupported();
                return v.t == JType::Int ? make_int(wrap_to(v.t, bits)) : make_long(wrap_to(v.t, bits));
            }
            case NodeKind::PostfixExpr:
                return step(e, false);
            case NodeKind::AssignExpr: {
                auto o = op(e);
                auto r = lvalue(ch.at(0));
                if (o == "=") {
                    RV v = coerce(eval(ch.at(1)), target_type(r));
                    return store(r, std::move(v));
                }
                RV old = load(r);
                RV rhs = eval(ch.at(1));
                auto bin = o.substr(0, o.size() - 1);
                RV v = arith(bin, old, rhs);
                // Compound assignment casts back to the target's type.
                JType tt = target_type(r);
                v = tt == JType::String || tt == JType::Boolean ? coerce(v, tt) : cast_to(v, tt);
                return store(r, std::move(v));
            }
            case NodeKind::CondExpr: {
                JType a = static_type(ch.at(1)), b = static_type(ch.at(2));
                RV v = truth(ch.at(0)) ? eval(ch.at(1)) : eval(ch.at(2));
                if (a != b && numeric(a) && numeric(b)) return coerce(v, JType::Long);
                return v;
            }
            case NodeKind::CastExpr:
                return cast_to(eval(ch.at(1)), declared_type(ch.at(0), 0));
            case NodeKind::ArrayAccess: {
                RV arr = eval(ch.at(0));
                if (arr.t != JType::IntArray) unsupported();
                LRef r;
                r.is_element = true;
                r.arr = arr.a;
                r.index = integral(ch.at(1));
                return load(r);
            }
            case NodeKind::FieldAccess: {
                if (!t_.has_own_token(e, "length")) unsupported();
                RV arr = eval(ch.at(0));
                if (arr.t != JType::IntArray) unsupported();
                return make_int(static_cast<std::int64_t>(arr.a->size()));
            }
            case NodeKind::MethodCall:
                return method_call(e);
            case NodeKind::NewArray: {
                auto type = ch.at(0);
                if (compact(type) != "int") unsupported();
                if (ch.size() == 2 && kind(ch[1]) == NodeKind::ArrayInit) {
                    if (t_.own_tokens(e).size() != 3) unsupported();  // new int[] {...} only
                    return array_init(ch[1], JType::IntArray);
                }
                if (ch.size() != 2 || kind(ch[1]) != NodeKind::DimExpr || t_.own_tokens(e).size() != 1) {
                    unsupported();
                }
                auto n = integral(t_.child(ch[1], 0));
                if (n < 0 || n > kMaxArray) unsupported();
                return {JType::IntArray, 0, {}, std::make_shared<std::vector<std::int32_t>>(static_cast<std::size_t>(n), 0)};
            }
            default:
                unsupported();
        }
    }

    RV method_call(NodeId e) {
        if (!t_.has_own_token(e, ".")) unsupported();
        auto own = t_.own_tokens(e);
        auto name = t_.token_text(own.back());
        RV recv = eval(t_.child(e, 0));
        if (recv.t != JType::String) unsupported();
        const auto& args = kids_.at(t_.child_of_kind(e, NodeKind::Arguments));
        if (name == "length" && args.empty()) return make_int(utf16_length(recv.s));
        if (name == "isEmpty" && args.empty()) return make_bool(recv.s.empty());
        if (name == "equals" && args.size() == 1) {
            RV arg = eval(args[0]);
            // A boxed number or boolean is never equal to a String.
            return make_bool(arg.t == JType::String && arg.s == recv.s);
        }
        unsupported();
    }
};

Value to_value(const RV& v) {
    switch (v.t) {
        case JType::Int: return static_cast<std::int32_t>(v.n);
        case JType::Long: return v.n;
        case JType::Boolean: return v.n != 0;
        case JType::String: return v.s;
        case JType::IntArray: return *v.a;
    }
    return false;
}

}  // namespace

std::string_view type_name(JType type) {
    switch (type) {
        case JType::Int: return "int";
        case JType::Long: return "long";
        case JType::Boolean: return "boolean";
        case JType::String: return "String";
        case JType::IntArray: return "int[]";
    }
    return "?";
}

std::optional<JType> parse_type(std::string_view text) {
    for (auto t : {JType::Int, JType::Long, JType::Boolean, JType::String, JType::IntArray}) {
        if (type_name(t) == text) return t;
    }
    return std::nullopt;
}

std::string to_string(const Value& v) {
    switch (type_of(v)) {
        case JType::Int: return std::to_string(std::get<std::int32_t>(v));
        case JType::Long: return std::to_string(std::get<std::int64_t>(v)) + "L";
        case JType::Boolean: return std::get<bool>(v) ? "true" : "false";
        case JType::String: {
            std::string out = "\"";
            for (char c : std::get<std::string>(v)) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            return out + "\"";
        }
        case JType::IntArray: {
            std::string out = "{";
            const auto& a = std::get<std::vector<std::int32_t>>(v);
            for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + std::to_string(a[i]);
            return out + "}";
        }
    }
    return "?";
}

std::string_view trap_name(Trap trap) {
    switch (trap) {
        case Trap::DivByZero: return "DivByZero";
        case Trap::IndexOutOfBounds: return "IndexOutOfBounds";
        case Trap::StepLimit: return "StepLimit";
        case Trap::Unsupported: return "Unsupported";
    }
    return "?";
}

ExecResult ExecResult::of(Value v, std::vector<std::vector<std::int32_t>> arrays) {
    ExecResult r;
    r.value = std::move(v);
    r.arrays = std::move(arrays);
    return r;
}

ExecResult ExecResult::trapped(Trap t) {
    ExecResult r;
    r.status = Status::Trap;
    r.trap = t;
    return r;
}

std::string to_string(const ExecResult& r) {
    if (r.status == ExecResult::Status::Trap) return "Trap(" + std::string(trap_name(*r.trap)) + ")";
    std::string out = "Value(" + to_string(*r.value) + ")";
    for (const auto& a : r.arrays) out += " " + to_string(Value(a));
    return out;
}

std::string wrap(const SnippetSpec& spec) {
    std::string out = "class Snippet { static ";
    out += type_name(spec.return_type);
    out += " f(";
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ", ";
        out += type_name(spec.params[i].type);
        out += " " + spec.params[i].name;
    }
    out += ") { " + spec.body + " } }";
    return out;
}

std::vector<NamedSnippet> static_methods(const SyntaxTree& tree) {
    std::vector<NamedSnippet> out;
    auto compact = [&](NodeId id) {
        std::string s;
        for (auto i = tree.node(id).first_token; i < tree.node(id).end_token; ++i) s += tree.token_text(i);
        return s;
    };
    for (NodeId m = 0; m < tree.nodes().size(); ++m) {
        if (tree.node(m).kind != NodeKind::MethodDecl || tree.subtree_has_error(m)) continue;
        auto mods = tree.child_of_kind(m, NodeKind::Modifiers);
        auto type = tree.child_of_kind(m, NodeKind::Type);
        auto params = tree.child_of_kind(m, NodeKind::FormalParams);
        auto body = tree.child_of_kind(m, NodeKind::Block);
        if (mods == java::kNoNode || !tree.has_own_token(mods, "static") || type == java::kNoNode ||
            params == java::kNoNode || body == java::kNoNode ||
            tree.child_of_kind(m, NodeKind::TypeParams) != java::kNoNode) {
            continue;
        }
        auto ret = parse_type(compact(type));
        if (!ret) continue;
        NamedSnippet s;
        s.spec.return_type = *ret;
        for (auto tok : tree.own_tokens(m)) {
            if (tree.token(tok).kind == TokenKind::Identifier) {
                s.name = std::string(tree.token_text(tok));
                break;
            }
        }
        bool ok = true;
        for (auto p : tree.children(params)) {
            auto ptype = tree.child_of_kind(p, NodeKind::Type);
            std::string text = ptype == java::kNoNode ? "" : compact(ptype);
            std::string name;
            for (auto tok : tree.own_tokens(p)) {
                auto tt = tree.token_text(tok);
                if (tt == "[") text += "[]";
                if (tt == "...") ok = false;
                if (tree.token(tok).kind == TokenKind::Identifier) name = std::string(tt);
            }
            auto pt = parse_type(text);
            if (!pt || name.empty() || tree.child_of_kind(p, NodeKind::Modifiers) != java::kNoNode) ok = false;
            if (ok) s.spec.params.push_back({name, *pt});
        }
        if (!ok) continue;
        auto own = tree.own_tokens(body);
        auto open = tree.token(own.front());
        auto close = tree.token(own.back());
        s.spec.body = std::string(tree.source().substr(open.end, close.begin - open.end));
        out.push_back(std::move(s));
    }
    return out;
}

struct Program::Compiled {
    SyntaxTree tree;
    NodeId body;
    std::vector<std::vector<NodeId>> kids;
};

Program::Program(const SnippetSpec& spec) : spec_(spec) {
    std::optional<SyntaxTree> tree;
    try {
        tree.emplace(java::parse(wrap(spec_)));
    } catch (const InvalidInput&) {
        return;
    }
    if (tree->error_count() != 0) return;
    for (NodeId m = 0; m < tree->nodes().size(); ++m) {
        if (tree->node(m).kind != NodeKind::MethodDecl) continue;
        std::vector<std::vector<NodeId>> kids(tree->nodes().size());
        for (NodeId id = 0; id < kids.size(); ++id) kids[id] = tree->children(id);
        auto body = tree->child_of_kind(m, NodeKind::Block);
        code_ = std::make_unique<Compiled>(Compiled{std::move(*tree), body, std::move(kids)});
        return;
    }
}

Program::~Program() = default;
Program::Program(Program&&) noexcept = default;
Program& Program::operator=(Program&&) noexcept = default;

ExecResult Program::run(const std::vector<Value>& args, std::int64_t step_limit) const {
    if (step_limit <= 0) throw InvalidInput("step_limit must be positive");
    if (args.size() != spec_.params.size()) throw InvalidInput("argument count does not match the parameters");
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (type_of(args[i]) != spec_.params[i].type) {
            throw InvalidInput("argument " + std::to_string(i) + " is not of type " +
                               std::string(type_name(spec_.params[i].type)));
        }
    }
    if (!code_) return ExecResult::trapped(Trap::Unsupported);
    try {
        Interp in(code_->tree, code_->kids, step_limit, spec_.return_type);
        std::vector<Array> arrays;
        for (std::size_t i = 0; i < args.size(); ++i) {
            RV v;
            v.t = spec_.params[i].type;
            switch (v.t) {
                case JType::Int: v.n = std::get<std::int32_t>(args[i]); break;
                case JType::Long: v.n = std::get<std::int64_t>(args[i]); break;
                case JType::Boolean: v.n = std::get<bool>(args[i]); break;
                case JType::String: v.s = std::get<std::string>(args[i]); break;
                case JType::IntArray:
                    v.a = std::make_shared<std::vector<std::int32_t>>(std::get<std::vector<std::int32_t>>(args[i]));
                    arrays.push_back(v.a);
                    break;
            }
            in.bind(spec_.params[i].name, std::move(v));
        }
        RV r = in.call(code_->body);
        std::vector<std::vector<std::int32_t>> after;
        for (const auto& a : arrays) after.push_back(*a);
        return ExecResult::of(to_value(r), std::move(after));
    } catch (const TrapSignal& t) {
        return ExecResult::trapped(t.trap);
    }
}

ExecResult evaluate(const SnippetSpec& spec, const std::vector<Value>& args, std::int64_t step_limit) {
    return Program(spec).run(args, step_limit);
}

}  // namespace sect::equiv

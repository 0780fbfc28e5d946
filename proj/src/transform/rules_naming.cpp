#include <unordered_set>

#include "sect/java/lexer.hpp"
#include "transform/rule_impl.hpp"

namespace sect::transform {

// A name is renamed only when every use inside the unit resolves to one of
// its local bindings and no nested class body mentions it.
std::size_t rename_variable(RuleContext& cx) {
    const auto& an = cx.an;
    const auto& t = cx.tree();
    std::size_t sites = 0;
    for (const auto& unit : an.units()) {
        if (an.tainted(unit.node)) continue;
        std::vector<std::string_view> names;
        for (const auto& b : unit.bindings) {
            if (std::find(names.begin(), names.end(), b.name) == names.end()) names.push_back(b.name);
        }
        std::unordered_set<std::string_view> nested;
        for (auto body : unit.nested_bodies) {
            const auto& n = t.node(body);
            for (auto i = n.first_token; i < n.end_token; ++i) {
                if (t.token(i).kind == java::TokenKind::Identifier) nested.insert(t.token_text(i));
            }
        }
        for (auto name : names) {
            if (nested.contains(name)) continue;
            std::vector<std::uint32_t> tokens;
            for (const auto& b : unit.bindings) {
                if (b.name == name) tokens.push_back(b.name_token);
            }
            bool resolved = true;
            for (auto use : unit.names) {
                if (an.name_of(use) != name) continue;
                if (an.resolve(use) == nullptr) {
                    resolved = false;
                    break;
                }
                tokens.push_back(t.node(use).first_token);
            }
            if (!resolved) continue;
            ++sites;
            if (cx.out == nullptr) continue;
            auto fresh = cx.fresh->next();
            for (auto tok : tokens) cx.out->replace(t.token(tok).begin, t.token(tok).end, fresh);
        }
    }
    return sites;
}

}  // namespace sect::transform

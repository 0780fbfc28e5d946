#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "sect/error.hpp"
#include "sect/parallel.hpp"
#include "sect/transform/rules.hpp"
#include "transform/rule_impl.hpp"

namespace sect::transform {

namespace {

struct Entry {
    TransformRule rule;
    RuleFn fn;
    // Output may hold fresh sites of the same rule, so passes repeat.
    bool self_consuming;
};

constexpr auto N = Level::Naming;
constexpr auto S = Level::Statement;
constexpr auto E = Level::Expression;

const std::array<Entry, kRuleCount> kTable = {{
    {{1, "RenameVariable", N}, rename_variable, false},
    {{2, "For2While", S}, for_to_while, true},
    {{3, "While2For", S}, while_to_for, true},
    {{4, "Do2While", S}, do_to_while, true},
    {{5, "IfElseIf2IfElse", S}, else_if_to_else, true},
    {{6, "IfElse2IfElseIf", S}, else_to_else_if, true},
    {{7, "Switch2If", S}, switch_to_if, true},
    {{8, "Unary2Add", E}, unary_to_add, false},
    {{9, "Add2Equal", E}, add_assign_expand, false},
    {{10, "DivideVarDecl", E}, divide_var_decl, true},
    {{11, "MergeVarDecl", E}, merge_var_decl, true},
    {{12, "SwapStatement", S}, swap_statement, false},
    {{13, "ModifyConstant", E}, modify_constant, false},
    {{14, "ReverseIf", S}, reverse_if, false},
    {{15, "If2CondExp", S}, if_to_cond_exp, true},
    {{16, "ConfExp2If", S}, cond_exp_to_if, true},
    {{17, "InfixDividing", E}, infix_dividing, false},
    {{18, "DividePrePostFix", E}, divide_pre_post_fix, false},
    {{19, "DividingComposedIf", S}, divide_composed_if, false},
    {{20, "LoopIfContinue2Else", S}, loop_if_continue, true},
    {{21, "SwitchEqualExp", E}, swap_equal_exp, false},
    {{22, "SwitchStringEqual", E}, swap_string_equal, false},
    {{23, "SwitchRelation", E}, swap_relation, false},
}};

const std::array<TransformRule, kRuleCount> kRules = [] {
    std::array<TransformRule, kRuleCount> out{};
    for (std::size_t i = 0; i < kTable.size(); ++i) out[i] = kTable[i].rule;
    return out;
}();

constexpr int kMaxPasses = 32;

const Entry& entry(const TransformRule& r) { return kTable.at(static_cast<std::size_t>(rule(r.id).id - 1)); }

}  // namespace

std::string_view level_name(Level level) {
    switch (level) {
        case Level::Naming:
            return "Naming";
        case Level::Statement:
            return "Statement";
        case Level::Expression:
            return "Expression";
    }
    return "?";
}

std::span<const TransformRule> rules() { return kRules; }

const TransformRule& rule(int id) {
    if (id < 1 || id > kRuleCount) throw InvalidInput("unknown rule id " + std::to_string(id));
    return kRules[static_cast<std::size_t>(id - 1)];
}

std::vector<NodeId> nodes_of(const Analysis& an, NodeKind kind) {
    std::vector<NodeId> out;
    const auto& nodes = an.tree().nodes();
    for (NodeId id = 0; id < nodes.size(); ++id) {
        if (nodes[id].kind == kind && !an.tainted(id)) out.push_back(id);
    }
    return out;
}

void innermost_first(const SyntaxTree& t, std::vector<NodeId>& sites) {
    std::stable_sort(sites.begin(), sites.end(), [&](NodeId a, NodeId b) {
        auto sa = t.span(a);
        auto sb = t.span(b);
        auto la = sa.end - sa.begin;
        auto lb = sb.end - sb.begin;
        if (la != lb) return la < lb;
        return a > b;  // equal spans: the descendant comes later in pre-order
    });
}

std::string paren_if(bool cond, std::string text) { return cond ? "(" + text + ")" : text; }

std::size_t count_sites(const TransformRule& r, const java::SyntaxTree& tree) {
    Analysis an(tree);
    RuleContext cx{an, nullptr, nullptr};
    return entry(r).fn(cx);
}

bool applicable(const TransformRule& r, const java::SyntaxTree& tree) { return count_sites(r, tree) > 0; }

TransformOutcome apply_rule(const TransformRule& r, const java::SyntaxTree& tree, std::uint64_t seed) {
    const auto& e = entry(r);
    TransformOutcome out;
    out.rule_id = r.id;
    out.seed = seed;
    FreshNames fresh(tree, seed);
    auto errors = tree.error_count();
    const java::SyntaxTree* current = &tree;
    std::optional<java::SyntaxTree> owned;
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        Analysis an(*current);
        EditBuffer buffer(current->source());
        RuleContext cx{an, &buffer, &fresh};
        std::size_t sites = 0;
        try {
            sites = e.fn(cx);
        } catch (const std::logic_error& err) {
            throw InternalRewriteError(r.id, "", err.what());
        }
        if (sites == 0) break;
        out.site_count += static_cast<std::int64_t>(sites);
        auto reparsed = java::parse(buffer.result());
        if (reparsed.error_count() != errors) {
            throw InternalRewriteError(r.id, "",
                                       "output has " + std::to_string(reparsed.error_count()) +
                                           " error nodes, input has " + std::to_string(errors));
        }
        owned.emplace(std::move(reparsed));
        current = &*owned;
        if (!e.self_consuming) break;
    }
    out.applied = out.site_count > 0;
    out.text = std::string(current->source());
    return out;
}

std::vector<int> composition_order(const ApplicableCounts& counts) {
    std::vector<int> order;
    for (int id = 1; id <= kRuleCount; ++id) {
        if (counts[static_cast<std::size_t>(id - 1)] > 0) order.push_back(id);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return counts[static_cast<std::size_t>(a - 1)] < counts[static_cast<std::size_t>(b - 1)];
    });
    return order;
}

CompositionResult apply_all(std::span<const java::SourceUnit> units, std::uint64_t seed, unsigned jobs) {
    CompositionResult result;
    std::vector<std::array<bool, kRuleCount>> hits(units.size());
    parallel_for(units.size(), jobs, [&](std::size_t i) {
        auto tree = java::parse(units[i].text);
        for (const auto& r : kRules) hits[i][static_cast<std::size_t>(r.id - 1)] = applicable(r, tree);
    });
    for (const auto& h : hits) {
        for (std::size_t r = 0; r < h.size(); ++r) result.counts[r] += h[r] ? 1 : 0;
    }
    result.order = composition_order(result.counts);
    result.outcomes.resize(units.size());
    parallel_for(units.size(), jobs, [&](std::size_t i) {
        auto& out = result.outcomes[i];
        out.rule_id = kAllRules;
        out.seed = seed;
        out.text = units[i].text;
        for (int id : result.order) {
            try {
                auto step = apply_rule(rule(id), java::parse(out.text), seed);
                out.site_count += step.site_count;
                out.text = std::move(step.text);
            } catch (const InternalRewriteError& err) {
                throw InternalRewriteError(err.rule_id(), units[i].id, err.detail());
            }
        }
        out.applied = out.site_count > 0;
    });
    return result;
}

}  // namespace sect::transform

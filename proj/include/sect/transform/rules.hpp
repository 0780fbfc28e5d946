#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sect/java/features.hpp"
#include "sect/java/syntax_tree.hpp"

namespace sect::transform {

enum class Level { Naming, Statement, Expression };

std::string_view level_name(Level level);

struct TransformRule {
    int id;
    std::string_view name;
    Level level;
};

inline constexpr int kRuleCount = 23;
// rule_id of outcomes produced by the composed pipeline.
inline constexpr int kAllRules = 0;

std::span<const TransformRule> rules();
// Throws InvalidInput for ids outside 1..23.
const TransformRule& rule(int id);

struct TransformOutcome {
    int rule_id = 0;
    bool applied = false;
    std::int64_t site_count = 0;
    std::string text;
    std::uint64_t seed = 0;
};

// Rewrite sites the rule would touch in one pass.
std::size_t count_sites(const TransformRule& rule, const java::SyntaxTree& tree);
bool applicable(const TransformRule& rule, const java::SyntaxTree& tree);

// Rewrites every site, repeating for rules whose output can expose new sites
// of the same rule. Throws InternalRewriteError when the output does not
// re-parse with the input's error count.
TransformOutcome apply_rule(const TransformRule& rule, const java::SyntaxTree& tree,
                            std::uint64_t seed);

using ApplicableCounts = std::array<std::size_t, kRuleCount>;

// Rule ids by ascending applicable count, ties by id. Rules with a zero
// count are omitted.
std::vector<int> composition_order(const ApplicableCounts& counts);

struct CompositionResult {
    ApplicableCounts counts{};
    std::vector<int> order;
    std::vector<TransformOutcome> outcomes;  // one per unit, rule_id = kAllRules
};

// Applies every rule in composition order, each to the output of the
// previous one. InternalRewriteError carries the unit id.
CompositionResult apply_all(std::span<const java::SourceUnit> units, std::uint64_t seed,
                            unsigned jobs = 1);

}  // namespace sect::transform

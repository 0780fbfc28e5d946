#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sect/equiv/interpreter.hpp"

namespace sect::equiv {

/// Fixed pool that string arguments are drawn from.
std::span<const std::string_view> string_pool();

/// One argument vector: ints uniform in [-100, 100] mixed with the type's
/// boundary values, strings from the pool, int[] of length 0..8.
std::vector<Value> random_args(std::span<const Param> params, std::mt19937_64& rng);

struct Mismatch {
    std::int64_t trial = 0;
    std::vector<Value> args;
    ExecResult original;
    ExecResult transformed;
};

struct DiffReport {
    std::int64_t trials = 0;
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::int64_t skipped = 0;  // Unsupported on either side
    std::optional<Mismatch> first_failure;

    bool pass() const { return failed == 0; }
    void merge(const DiffReport& other);
};

/// Runs both snippets on `trials` seeded argument vectors. Parameter names
/// may differ; their types and the return type may not (InvalidInput).
DiffReport differential_test(const SnippetSpec& original, const SnippetSpec& transformed, std::int64_t trials,
                             std::uint64_t seed, std::int64_t step_limit = kDefaultStepLimit);

/// A hand-written snippet that exercises one rule.
struct CuratedSnippet {
    int rule_id = 0;
    SnippetSpec spec;
};

/// JSON Lines: {"rule_id", "return", "params": [[name, type], ...], "body"}.
std::vector<CuratedSnippet> parse_snippets(std::string_view jsonl);
std::vector<CuratedSnippet> load_snippets(const std::filesystem::path& path);

struct RuleCheck {
    int rule_id = 0;
    std::int64_t snippets = 0;
    std::int64_t not_applied = 0;  // snippets the rule left untouched
    DiffReport diff;
    // Set with the first mismatch.
    std::string failing_original;
    std::string failing_transformed;
};

/// Applies the rule to every snippet (wrapped in a class) and compares the
/// rewritten method against the original.
RuleCheck check_rule(int rule_id, std::span<const SnippetSpec> snippets, std::int64_t trials, std::uint64_t seed,
                     std::int64_t step_limit = kDefaultStepLimit);

/// Pairs the static methods of two versions of a unit by position and
/// compares each pair. A changed method list counts as one failed trial.
DiffReport check_unit(std::string_view original, std::string_view transformed, std::int64_t trials,
                      std::uint64_t seed, std::int64_t step_limit = kDefaultStepLimit);

/// {"rule_id","snippets","trials","passed","failed","skipped","first_failure":{...}|null}
std::string report_json(const RuleCheck& check);

}  // namespace sect::equiv

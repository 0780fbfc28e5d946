#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sect/java/features.hpp"
#include "sect/mi/scoring.hpp"
#include "sect/random.hpp"

namespace sect::mi {

struct DatasetParams {
    std::size_t max_per_side = 1000;
    std::size_t min_words = 100;  // kept samples have strictly more words
    std::size_t max_words = 200;
    std::uint64_t seed = 0;
};

/// Member samples are rule-applicable training units; non-members come from
/// the held-out pool. Both sides have the same size and are stored
/// truncated to max_words words, in pool order.
struct MIDataset {
    int rule_id = 0;  // 0 means applicable to any rule
    std::vector<java::SourceUnit> members;
    std::vector<java::SourceUnit> nonmembers;
    DatasetParams params;
};

/// Throws InvalidInput("no applicable members") when no training unit passes
/// the applicability and length filters, or when the held-out pool has no
/// eligible unit.
MIDataset build_dataset(std::span<const java::SourceUnit> train_pool, std::span<const java::SourceUnit> test_pool,
                        int rule_id, const DatasetParams& params);

// ---- scores ------------------------------------------------------------------------

struct ScoreRecord {
    std::string id;
    Method method = Method::Loss;
    double value = 0;
    bool is_member = false;
};

/// One JSON object per line: {"id","method","value","is_member"}.
std::string scores_jsonl(std::span<const ScoreRecord> scores);
std::vector<ScoreRecord> parse_scores(std::string_view jsonl);

/// Records of one method, in input order.
std::vector<ScoreRecord> select(std::span<const ScoreRecord> scores, Method method);

/// P(member value < non-member value) + 1/2 P(tie), from exact pair counts.
/// Lower values are member-like. Throws InvalidInput unless both classes
/// are present.
double auc_roc(std::span<const ScoreRecord> scores);

struct RocResult {
    double auc = 0;
    double bootstrap_mean = 0;
    double ci_low = 0;
    double ci_high = 0;
    int n_boot = 0;
    std::uint64_t seed = 0;
    std::size_t n_member = 0;
    std::size_t n_nonmember = 0;
};

inline constexpr int kDefaultBootstrap = 1000;

/// Stratified bootstrap: resample b draws members and non-members with
/// replacement at their original sizes from an engine seeded with seed + b.
/// The interval is the 2.5th and 97.5th percentile with linear
/// interpolation. Resamples run on up to `jobs` threads; the result does
/// not depend on `jobs`.
RocResult bootstrap_auc(std::span<const ScoreRecord> scores, int n_boot, std::uint64_t seed, int jobs = 1);

/// {"method","auc","bootstrap_mean","ci":[lo,hi],"n_member","n_nonmember","seed"}
std::string report_json(Method method, const RocResult& roc);

/// Fraction of positions where the tokens agree. Throws InvalidInput on a
/// length mismatch or empty input.
double token_accuracy(std::span<const std::string> reference, std::span<const std::string> predicted);

}  // namespace sect::mi

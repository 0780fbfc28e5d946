#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sect/causal/causal.hpp"
#include "sect/error.hpp"
#include "sect/java/features.hpp"
#include "sect/mi/eval.hpp"
#include "sect/mi/scoring.hpp"
#include "sect/transform/rules.hpp"

namespace sect::app {

/// Bad flags, missing inputs or unreadable files. Exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A pipeline stage failed on valid configuration. Exit code 3.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& detail)
        : Error("stage " + stage + ": " + detail), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitStage = 3;

/// "ALL" or a comma-separated list of rule ids in 1..23, kept in the given
/// order without duplicates. Throws ConfigError.
std::vector<int> parse_rule_list(std::string_view text);

/// A single rule id, or "ALL" for the composition of every rule (id 0).
int parse_rule_or_all(std::string_view text);

/// --jobs default: SECT_AUDIT_JOBS when set (a positive integer), else 1.
int default_jobs();

/// Runs fn(0..n-1) on up to `jobs` threads and rethrows the first failure.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// ---- files -------------------------------------------------------------------------

std::string read_text(const std::filesystem::path& path);  // ConfigError if unreadable
void write_text(const std::filesystem::path& path, std::string_view text);  // creates parents
std::string sha256_hex(std::string_view bytes);

// ---- stages ------------------------------------------------------------------------

/// One outcome per unit, in unit order. Rule 0 composes every rule.
std::vector<transform::TransformOutcome> transform_units(std::span<const java::SourceUnit> units, int rule_id,
                                                         std::uint64_t seed, int jobs);

/// {"id","rule_id","applied","site_count","seed"} per unit.
std::string transform_manifest(std::span<const java::SourceUnit> units,
                               std::span<const transform::TransformOutcome> outcomes);

/// Writes each outcome's text under `dir` at the unit's relative path.
void write_units(const std::filesystem::path& dir, std::span<const java::SourceUnit> units,
                 std::span<const transform::TransformOutcome> outcomes);

/// {"id","nloc","token_count","ast_levels","ast_nodes","identifier_count","ast_error_count","code_complexity"}
std::string features_jsonl(std::span<const java::SourceUnit> units, int jobs);
std::map<std::string, java::CodeFeatures> parse_features(std::string_view jsonl);

/// {"id","is_member","word_count","text"} per sample, members first.
std::string dataset_jsonl(const mi::MIDataset& dataset);
mi::MIDataset parse_dataset(std::string_view jsonl);

struct ProviderSpec {
    enum class Kind { Surrogate, Remote } kind = Kind::Surrogate;
    int order = 3;
    double alpha = 0.1;
    std::string endpoint;
};

ProviderSpec parse_provider(std::string_view kind, int order, double alpha, std::string endpoint);

/// Surrogate providers are trained on `fit`; remote ones ignore it.
std::shared_ptr<const mi::LikelihoodProvider> make_provider(const ProviderSpec& spec,
                                                            std::span<const java::SourceUnit> fit);

/// LOSS, MIN_K and ZLIB for every sample, members first, three records per
/// sample in that method order.
std::vector<mi::ScoreRecord> score_samples(const mi::LikelihoodProvider& provider,
                                           std::span<const java::SourceUnit> members,
                                           std::span<const java::SourceUnit> nonmembers, double k, int jobs);

/// One report line per method present, in method order.
std::string evaluate_jsonl(std::span<const mi::ScoreRecord> scores, int n_boot, std::uint64_t seed, int jobs);

/// Two rows per member: T=0 with its scores under the original-trained
/// provider and the original unit's features, T=1 with its scores under the
/// transformed-trained provider and the transformed unit's features.
/// Throws InvalidInput when a member lacks a score or feature record.
std::vector<causal::CausalRow> build_frame(std::span<const java::SourceUnit> members,
                                           std::span<const mi::ScoreRecord> original_scores,
                                           std::span<const mi::ScoreRecord> transformed_scores,
                                           const std::map<std::string, java::CodeFeatures>& original_features,
                                           const std::map<std::string, java::CodeFeatures>& transformed_features);

// ---- pipeline ----------------------------------------------------------------------

struct PipelineConfig {
    std::filesystem::path train_dir;
    std::filesystem::path test_dir;
    std::filesystem::path out_dir;
    std::vector<int> rules;
    std::uint64_t seed = 0;
    ProviderSpec provider;
    double k = mi::kDefaultK;
    int bootstrap = mi::kDefaultBootstrap;
    mi::DatasetParams dataset;  // its seed is overridden by `seed`
    int jobs = 1;
};

struct Artifact {
    std::string path;  // relative to out_dir, '/'-separated
    std::string sha256;
    std::uintmax_t bytes = 0;
};

struct PipelineResult {
    std::vector<Artifact> artifacts;  // sorted by path; excludes the manifest
    std::string manifest;             // contents of manifest.json
};

/// transform -> dataset -> train one provider on the original members and
/// one on their transformed versions -> score -> bootstrap AUC -> causal
/// frame -> ATE report, per rule under out_dir/rule-NN/, then
/// out_dir/manifest.json. Identical configs give byte-identical artifacts.
/// Throws ConfigError for unusable configuration and StageError otherwise;
/// artifacts already written are kept.
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace sect::app

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sect/java/features.hpp"

namespace sect::causal {

/// One unit under one treatment arm. Outcomes are indexed by Outcome.
struct CausalRow {
    std::string unit_id;
    int treatment = 0;  // 0 original, 1 transformed
    std::array<double, 3> y{};
    java::CodeFeatures z;
};

enum class Outcome : std::uint8_t { Y0, Y1, Y2 };  // LOSS, MIN_K, ZLIB derived
inline constexpr std::array<Outcome, 3> kOutcomes = {Outcome::Y0, Outcome::Y1, Outcome::Y2};
std::string_view outcome_name(Outcome outcome);

/// Names of the confounder columns, in CodeFeatures order.
std::span<const std::string_view> feature_names();
std::array<double, 7> feature_values(const java::CodeFeatures& z);

inline constexpr double kEpsilon = 1e-9;

/// (v - min) / (max - min + epsilon). Throws InvalidInput for empty input
/// or epsilon <= 0.
std::vector<double> relative_scores(std::span<const double> values, double epsilon = kEpsilon);

/// Rows with every outcome replaced by its relative score within the row's
/// treatment arm.
std::vector<CausalRow> relativize(std::span<const CausalRow> rows, double epsilon = kEpsilon);

/// Numeric view of a frame for one outcome.
struct Frame {
    std::vector<double> t;
    std::vector<double> y;
    Eigen::MatrixXd z;  // rows x confounders
    std::vector<std::string> z_names;
};

Frame make_frame(std::span<const CausalRow> rows, Outcome outcome);

struct AteFit {
    double ate = 0;
    std::vector<std::string> dropped;  // confounders removed as constant or collinear
};

/// Coefficient on T in the least-squares fit Y ~ 1 + T + Z. Confounder
/// columns that are constant, or linear in the intercept, T and the columns
/// kept before them, are dropped in column order. Throws InvalidInput unless
/// both arms are present and every value is finite.
AteFit estimate_ate(const Frame& frame);

/// Pearson correlation of T and Y; nullopt when Y has zero variance.
/// Throws InvalidInput unless both arms are present.
std::optional<double> pearson(const Frame& frame);

enum class Refuter : std::uint8_t { R1, R2, R3, R4 };
inline constexpr std::array<Refuter, 4> kRefuters = {Refuter::R1, Refuter::R2, Refuter::R3, Refuter::R4};
std::string_view refuter_name(Refuter r);

struct Refutation {
    Refuter method = Refuter::R1;
    double new_value = 0;  // perturbed estimate (R4: mean over subsets)
    bool passed = false;
    std::optional<double> std_dev;  // R4 only
};

inline constexpr double kShiftTolerance = 0.05;  // R1, R3: |shift| <= max(this, 10% of |ATE|)
inline constexpr double kPlaceboTolerance = 0.05;
inline constexpr double kSubsetStdTolerance = 0.1;
inline constexpr int kSubsets = 10;
inline constexpr double kConfounderCorrelation = 0.2;

/// R1 adds a standard normal covariate; R2 permutes T; R3 adds a
/// synthetic confounder correlated 0.2 with T and with Y; R4 refits on 10
/// subsets of 80% of the rows (subset i drawn with seed + i).
Refutation refute(const Frame& frame, Refuter method, std::uint64_t seed);

/// Column whose sample correlation with T and with Y is exactly `target`,
/// built from seeded noise orthogonalized against 1, T and Y. When the two
/// correlations are jointly infeasible (corr(T, Y) < 2*target^2 - 1) or Y is
/// constant, the Y component is dropped and only corr with T is exact.
std::vector<double> synthetic_confounder(const Frame& frame, double target, std::uint64_t seed);

struct OutcomeReport {
    Outcome outcome = Outcome::Y0;
    std::optional<double> p;
    double ate = 0;
    std::vector<std::string> dropped;
    std::array<Refutation, 4> refutations{};
};

inline constexpr std::string_view kEstimator = "backdoor.linear_regression";

struct AteReport {
    int rule_id = 0;
    std::string estimator{kEstimator};
    std::size_t n_rows = 0;
    std::uint64_t seed = 0;
    std::vector<OutcomeReport> outcomes;
};

/// Estimates, correlations and all refutations for every outcome of `rows`
/// as given (callers relativize first when they want relative scores).
AteReport analyze(std::span<const CausalRow> rows, int rule_id, std::uint64_t seed);

/// {"rule_id","estimator","n_rows","seed","outcomes":{"Y0":{"p","ate","dropped","refutations":{"R1":{...},...}},...}}
std::string report_json(const AteReport& report);

/// One object per line: {"unit_id","T","Y0","Y1","Y2","Z":{feature: value}}.
std::string rows_jsonl(std::span<const CausalRow> rows);
std::vector<CausalRow> parse_rows(std::string_view jsonl);

}  // namespace sect::causal

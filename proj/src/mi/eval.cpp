#include "sect/mi/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sect/error.hpp"
#include "sect/transform/rules.hpp"

namespace sect::mi {

namespace {

bool rule_applies(int rule_id, const java::SourceUnit& unit) {
    auto tree = java::parse(unit.text);
    if (rule_id != transform::kAllRules) return transform::applicable(transform::rule(rule_id), tree);
    for (const auto& r : transform::rules()) {
        if (transform::applicable(r, tree)) return true;
    }
    return false;
}

std::vector<java::SourceUnit> take(std::span<const java::SourceUnit> pool, const std::vector<std::size_t>& eligible,
                                   const std::vector<std::size_t>& picks, std::size_t max_words) {
    std::vector<java::SourceUnit> out;
    out.reserve(picks.size());
    for (auto i : picks) {
        const auto& u = pool[eligible[i]];
        auto t = java::make_unit(u.id, java::truncate_words(u.text, max_words));
        t.path = u.path;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

MIDataset build_dataset(std::span<const java::SourceUnit> train_pool, std::span<const java::SourceUnit> test_pool,
                        int rule_id, const DatasetParams& params) {
    if (rule_id != transform::kAllRules) transform::rule(rule_id);  // validates the id
    if (params.max_words <= params.min_words) throw InvalidInput("max_words must exceed min_words");
    std::vector<std::size_t> members, nonmembers;
    for (std::size_t i = 0; i < train_pool.size(); ++i) {
        const auto& u = train_pool[i];
        if (u.word_count > params.min_words && rule_applies(rule_id, u)) members.push_back(i);
    }
    for (std::size_t i = 0; i < test_pool.size(); ++i) {
        if (test_pool[i].word_count > params.min_words) nonmembers.push_back(i);
    }
    if (members.empty()) throw InvalidInput("no applicable members");
    if (nonmembers.empty()) throw InvalidInput("no eligible non-members");
    auto n = std::min({params.max_per_side, members.size(), nonmembers.size()});
    std::mt19937_64 rng(params.seed);
    auto mi = sample_indices(members.size(), n, rng);
    auto ni = sample_indices(nonmembers.size(), n, rng);
    MIDataset ds;
    ds.rule_id = rule_id;
    ds.params = params;
    ds.members = take(train_pool, members, mi, params.max_words);
    ds.nonmembers = take(test_pool, nonmembers, ni, params.max_words);
    return ds;
}

// ---- scores ------------------------------------------------------------------------

std::string scores_jsonl(std::span<const ScoreRecord> scores) {
    std::string out;
    for (const auto& s : scores) {
        nlohmann::ordered_json j;
        j["id"] = s.id;
        j["method"] = method_name(s.method);
        j["value"] = s.value;
        j["is_member"] = s.is_member;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<ScoreRecord> parse_scores(std::string_view jsonl) {
    std::vector<ScoreRecord> out;
    std::istringstream in{std::string(jsonl)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto where = "score line " + std::to_string(line_no);
        try {
            auto j = nlohmann::json::parse(line);
            ScoreRecord r;
            r.id = j.at("id").get<std::string>();
            auto m = parse_method(j.at("method").get<std::string>());
            if (!m) throw InvalidInput(where + ": unknown method");
            r.method = *m;
            r.value = j.at("value").get<double>();
            r.is_member = j.at("is_member").get<bool>();
            if (!std::isfinite(r.value)) throw InvalidInput(where + ": value must be finite");
            out.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(where + ": " + e.what());
        }
    }
    return out;
}

std::vector<ScoreRecord> select(std::span<const ScoreRecord> scores, Method method) {
    std::vector<ScoreRecord> out;
    for (const auto& s : scores) {
        if (s.method == method) out.push_back(s);
    }
    return out;
}

namespace {

struct Split {
    std::vector<double> members, nonmembers;
};

Split split(std::span<const ScoreRecord> scores) {
    Split s;
    for (const auto& r : scores) {
        if (!std::isfinite(r.value)) throw InvalidInput("score '" + r.id + "' is not finite");
        (r.is_member ? s.members : s.nonmembers).push_back(r.value);
    }
    if (s.members.empty() || s.nonmembers.empty()) throw InvalidInput("AUC needs both members and non-members");
    return s;
}

// Both inputs sorted ascending. Counts twice the Mann-Whitney statistic in
// integers, so the only rounding is the final division.
double sorted_auc(const std::vector<double>& m, const std::vector<double>& n) {
    std::uint64_t twice = 0;
    std::size_t below = 0, upto = 0;
    for (double v : n) {
        while (below < m.size() && m[below] < v) ++below;
        while (upto < m.size() && m[upto] <= v) ++upto;
        twice += 2 * below + (upto - below);
    }
    return static_cast<double>(twice) / (2.0 * static_cast<double>(m.size()) * static_cast<double>(n.size()));
}

double percentile(const std::vector<double>& sorted, double q) {
    double pos = q * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(pos));
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

double auc_roc(std::span<const ScoreRecord> scores) {
    auto s = split(scores);
    std::sort(s.members.begin(), s.members.end());
    std::sort(s.nonmembers.begin(), s.nonmembers.end());
    return sorted_auc(s.members, s.nonmembers);
}

RocResult bootstrap_auc(std::span<const ScoreRecord> scores, int n_boot, std::uint64_t seed, int jobs) {
    if (n_boot <= 0) throw InvalidInput("bootstrap count must be positive");
    auto s = split(scores);
    RocResult r;
    r.n_boot = n_boot;
    r.seed = seed;
    r.n_member = s.members.size();
    r.n_nonmember = s.nonmembers.size();
    r.auc = auc_roc(scores);

    std::vector<double> aucs(static_cast<std::size_t>(n_boot));
    auto resample = [&](std::size_t b) {
        std::mt19937_64 rng(seed + b);
        std::vector<double> m(s.members.size()), n(s.nonmembers.size());
        for (auto& x : m) x = s.members[draw_below(s.members.size(), rng)];
        for (auto& x : n) x = s.nonmembers[draw_below(s.nonmembers.size(), rng)];
        std::sort(m.begin(), m.end());
        std::sort(n.begin(), n.end());
        aucs[b] = sorted_auc(m, n);
    };
    auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, n_boot));
    if (workers == 1) {
        for (std::size_t b = 0; b < aucs.size(); ++b) resample(b);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t b = w; b < aucs.size(); b += workers) resample(b);
            });
        }
        for (auto& t : pool) t.join();
    }
    // Summed in resample order so the mean does not depend on `jobs`.
    r.bootstrap_mean = std::accumulate(aucs.begin(), aucs.end(), 0.0) / static_cast<double>(aucs.size());
    std::sort(aucs.begin(), aucs.end());
    r.ci_low = percentile(aucs, 0.025);
    r.ci_high = percentile(aucs, 0.975);
    return r;
}

std::string report_json(Method method, const RocResult& roc) {
    nlohmann::ordered_json j;
    j["method"] = method_name(method);
    j["auc"] = roc.auc;
    j["bootstrap_mean"] = roc.bootstrap_mean;
    j["ci"] = {roc.ci_low, roc.ci_high};
    j["n_member"] = roc.n_member;
    j["n_nonmember"] = roc.n_nonmember;
    j["seed"] = roc.seed;
    return j.dump();
}

double token_accuracy(std::span<const std::string> reference, std::span<const std::string> predicted) {
    if (reference.size() != predicted.size()) throw InvalidInput("token sequences differ in length");
    if (reference.empty()) throw InvalidInput("token sequences are empty");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < reference.size(); ++i) hits += reference[i] == predicted[i];
    return static_cast<double>(hits) / static_cast<double>(reference.size());
}

}  // namespace sect::mi

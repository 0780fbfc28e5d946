#include "sect/app/pipeline.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sect/mi/remote.hpp"
#include "sect/mi/surrogate.hpp"

namespace sect::app {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

int parse_rule_id(std::string_view text) {
    int id = 0;
    std::string s(text);
    std::size_t used = 0;
    try {
        id = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty() || id < 1 || id > transform::kRuleCount) {
        throw ConfigError("rule must be ALL or an id in 1.." + std::to_string(transform::kRuleCount) + ", got '" + s + "'");
    }
    return id;
}

std::vector<std::string> jsonl_lines(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    return out;
}

std::map<std::string, const mi::ScoreRecord*> member_scores(std::span<const mi::ScoreRecord> scores, mi::Method m) {
    std::map<std::string, const mi::ScoreRecord*> out;
    for (const auto& s : scores) {
        if (s.is_member && s.method == m) out[s.id] = &s;
    }
    return out;
}

// Runs one stage body, turning library errors into a StageError tagged
// with the stage name.
template <typename Fn>
auto stage(const std::string& name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

}  // namespace

std::vector<int> parse_rule_list(std::string_view text) {
    if (text == "ALL") {
        std::vector<int> all(transform::kRuleCount);
        std::iota(all.begin(), all.end(), 1);
        return all;
    }
    std::vector<int> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        int id = parse_rule_id(item);
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
    if (out.empty()) throw ConfigError("empty rule list");
    return out;
}

int parse_rule_or_all(std::string_view text) { return text == "ALL" ? transform::kAllRules : parse_rule_id(text); }

int default_jobs() {
    const char* env = std::getenv("SECT_AUDIT_JOBS");
    if (!env || !*env) return 1;
    std::string s(env);
    std::size_t used = 0;
    int jobs = 0;
    try {
        jobs = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || jobs < 1) throw ConfigError("SECT_AUDIT_JOBS must be a positive integer, got '" + s + "'");
    return jobs;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    auto workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr first;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!first) first = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first) std::rethrow_exception(first);
}

// ---- files -------------------------------------------------------------------------

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("cannot write " + path.string());
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[md[i] >> 4];
        out += kHex[md[i] & 15];
    }
    return out;
}

// ---- stages ------------------------------------------------------------------------

std::vector<transform::TransformOutcome> transform_units(std::span<const java::SourceUnit> units, int rule_id,
                                                         std::uint64_t seed, int jobs) {
    if (rule_id == transform::kAllRules) return transform::apply_all(units, seed, static_cast<unsigned>(jobs)).outcomes;
    const auto& r = transform::rule(rule_id);
    std::vector<transform::TransformOutcome> out(units.size());
    parallel_for(units.size(), jobs, [&](std::size_t i) {
        try {
            out[i] = transform::apply_rule(r, java::parse(units[i].text), seed);
        } catch (const InternalRewriteError& e) {
            throw InternalRewriteError(e.rule_id(), units[i].id, e.detail());
        }
    });
    return out;
}

std::string transform_manifest(std::span<const java::SourceUnit> units,
                               std::span<const transform::TransformOutcome> outcomes) {
    std::string out;
    for (std::size_t i = 0; i < units.size(); ++i) {
        Json j;
        j["id"] = units[i].id;
        j["rule_id"] = outcomes[i].rule_id;
        j["applied"] = outcomes[i].applied;
        j["site_count"] = outcomes[i].site_count;
        j["seed"] = outcomes[i].seed;
        out += j.dump() + "\n";
    }
    return out;
}

void write_units(const fs::path& dir, std::span<const java::SourceUnit> units,
                 std::span<const transform::TransformOutcome> outcomes) {
    for (std::size_t i = 0; i < units.size(); ++i) write_text(dir / units[i].path, outcomes[i].text);
}

std::string features_jsonl(std::span<const java::SourceUnit> units, int jobs) {
    std::vector<java::CodeFeatures> f(units.size());
    parallel_for(units.size(), jobs, [&](std::size_t i) { f[i] = java::extract_features(java::parse(units[i].text)); });
    std::string out;
    for (std::size_t i = 0; i < units.size(); ++i) {
        Json j;
        j["id"] = units[i].id;
        auto v = causal::feature_values(f[i]);
        auto names = causal::feature_names();
        for (std::size_t c = 0; c < v.size(); ++c) j[std::string(names[c])] = static_cast<std::int64_t>(v[c]);
        out += j.dump() + "\n";
    }
    return out;
}

std::map<std::string, java::CodeFeatures> parse_features(std::string_view jsonl) {
    std::map<std::string, java::CodeFeatures> out;
    for (const auto& line : jsonl_lines(jsonl)) {
        try {
            auto j = nlohmann::json::parse(line);
            java::CodeFeatures f;
            f.nloc = j.at("nloc").get<std::int64_t>();
            f.token_count = j.at("token_count").get<std::int64_t>();
            f.ast_levels = j.at("ast_levels").get<std::int64_t>();
            f.ast_nodes = j.at("ast_nodes").get<std::int64_t>();
            f.identifier_count = j.at("identifier_count").get<std::int64_t>();
            f.ast_error_count = j.at("ast_error_count").get<std::int64_t>();
            f.code_complexity = j.at("code_complexity").get<std::int64_t>();
            out[j.at("id").get<std::string>()] = f;
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("features: ") + e.what());
        }
    }
    return out;
}

std::string dataset_jsonl(const mi::MIDataset& ds) {
    std::string out;
    for (bool member : {true, false}) {
        for (const auto& u : member ? ds.members : ds.nonmembers) {
            Json j;
            j["id"] = u.id;
            j["is_member"] = member;
            j["word_count"] = u.word_count;
            j["text"] = u.text;
            out += j.dump() + "\n";
        }
    }
    return out;
}

mi::MIDataset parse_dataset(std::string_view jsonl) {
    mi::MIDataset ds;
    for (const auto& line : jsonl_lines(jsonl)) {
        try {
            auto j = nlohmann::json::parse(line);
            auto u = java::make_unit(j.at("id").get<std::string>(), j.at("text").get<std::string>());
            u.path = u.id;
            (j.at("is_member").get<bool>() ? ds.members : ds.nonmembers).push_back(std::move(u));
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("dataset: ") + e.what());
        }
    }
    if (ds.members.empty() || ds.nonmembers.empty()) throw InvalidInput("dataset needs members and non-members");
    return ds;
}

ProviderSpec parse_provider(std::string_view kind, int order, double alpha, std::string endpoint) {
    ProviderSpec spec;
    spec.order = order;
    spec.alpha = alpha;
    if (kind == "surrogate") {
        if (order < 1) throw ConfigError("--order must be >= 1");
        if (!(alpha > 0)) throw ConfigError("--alpha must be > 0");
        return spec;
    }
    if (kind == "remote") {
        if (endpoint.empty()) throw ConfigError("--provider remote needs --endpoint");
        spec.kind = ProviderSpec::Kind::Remote;
        spec.endpoint = std::move(endpoint);
        try {
            mi::RemoteProvider probe(spec.endpoint);
        } catch (const InvalidInput& e) {
            throw ConfigError(e.what());
        }
        return spec;
    }
    throw ConfigError("--provider must be surrogate or remote");
}

std::shared_ptr<const mi::LikelihoodProvider> make_provider(const ProviderSpec& spec,
                                                            std::span<const java::SourceUnit> fit) {
    if (spec.kind == ProviderSpec::Kind::Remote) return std::make_shared<mi::RemoteProvider>(spec.endpoint);
    return mi::NgramModel::train(fit, spec.order, spec.alpha);
}

std::vector<mi::ScoreRecord> score_samples(const mi::LikelihoodProvider& provider,
                                           std::span<const java::SourceUnit> members,
                                           std::span<const java::SourceUnit> nonmembers, double k, int jobs) {
    if (!(k > 0 && k <= 1)) throw ConfigError("--k must lie in (0, 1]");
    const std::size_t n = members.size() + nonmembers.size();
    std::vector<mi::ScoreRecord> out(3 * n);
    parallel_for(n, jobs, [&](std::size_t i) {
        bool member = i < members.size();
        const auto& u = member ? members[i] : nonmembers[i - members.size()];
        auto p = provider.profile(u.id, u.text);
        out[3 * i] = {u.id, mi::Method::Loss, mi::score_loss(p).value, member};
        out[3 * i + 1] = {u.id, mi::Method::MinK, mi::score_min_k(p, k).value, member};
        out[3 * i + 2] = {u.id, mi::Method::Zlib, mi::score_zlib(p, u.text).value, member};
    });
    return out;
}

std::string evaluate_jsonl(std::span<const mi::ScoreRecord> scores, int n_boot, std::uint64_t seed, int jobs) {
    std::string out;
    for (auto m : {mi::Method::Loss, mi::Method::MinK, mi::Method::Zlib}) {
        auto s = mi::select(scores, m);
        if (s.empty()) continue;
        out += mi::report_json(m, mi::bootstrap_auc(s, n_boot, seed, jobs)) + "\n";
    }
    if (out.empty()) throw InvalidInput("no scores to evaluate");
    return out;
}

std::vector<causal::CausalRow> build_frame(std::span<const java::SourceUnit> members,
                                           std::span<const mi::ScoreRecord> original_scores,
                                           std::span<const mi::ScoreRecord> transformed_scores,
                                           const std::map<std::string, java::CodeFeatures>& original_features,
                                           const std::map<std::string, java::CodeFeatures>& transformed_features) {
    const std::array<mi::Method, 3> methods = {mi::Method::Loss, mi::Method::MinK, mi::Method::Zlib};
    std::array<std::map<std::string, const mi::ScoreRecord*>, 3> s0, s1;
    for (std::size_t m = 0; m < 3; ++m) {
        s0[m] = member_scores(original_scores, methods[m]);
        s1[m] = member_scores(transformed_scores, methods[m]);
    }
    std::vector<causal::CausalRow> rows;
    for (int arm : {0, 1}) {
        const auto& scores = arm ? s1 : s0;
        const auto& features = arm ? transformed_features : original_features;
        for (const auto& u : members) {
            causal::CausalRow r;
            r.unit_id = u.id;
            r.treatment = arm;
            for (std::size_t m = 0; m < 3; ++m) {
                auto it = scores[m].find(u.id);
                if (it == scores[m].end()) {
                    throw InvalidInput("no " + std::string(mi::method_name(methods[m])) + " score for member '" + u.id + "'");
                }
                r.y[m] = it->second->value;
            }
            auto f = features.find(u.id);
            if (f == features.end()) throw InvalidInput("no features for member '" + u.id + "'");
            r.z = f->second;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

// ---- pipeline ----------------------------------------------------------------------

namespace {

std::vector<java::SourceUnit> load_pool(const fs::path& dir, const char* what) {
    if (!fs::is_directory(dir)) throw ConfigError(std::string(what) + " corpus is not a directory: " + dir.string());
    try {
        auto units = java::load_corpus(dir);
        if (units.empty()) throw ConfigError(std::string(what) + " corpus has no .java files: " + dir.string());
        return units;
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }
}

double mean_accuracy(const mi::LikelihoodProvider& provider, std::span<const java::SourceUnit> units, int jobs) {
    const auto* model = dynamic_cast<const mi::NgramModel*>(&provider);
    if (!model) return std::nan("");
    std::vector<double> acc(units.size());
    parallel_for(units.size(), jobs, [&](std::size_t i) {
        acc[i] = mi::token_accuracy(mi::lexical_tokens(units[i].text), model->predict(units[i].text));
    });
    return std::accumulate(acc.begin(), acc.end(), 0.0) / static_cast<double>(acc.size());
}

Json number_or_null(double v) { return std::isnan(v) ? Json(nullptr) : Json(v); }

class RuleRun {
public:
    RuleRun(const PipelineConfig& config, std::span<const java::SourceUnit> train,
            std::span<const java::SourceUnit> test, int rule_id, std::vector<std::string>& written)
        : cfg_(config), train_(train), test_(test), rule_(rule_id), written_(written) {
        char name[16];
        std::snprintf(name, sizeof name, "rule-%02d", rule_id);
        dir_ = name;
    }

    void run() {
        auto outcomes = stage("transform", [&] { return transform_units(train_, rule_, cfg_.seed, cfg_.jobs); });
        for (std::size_t i = 0; i < train_.size(); ++i) emit("transformed/" + train_[i].path, outcomes[i].text);
        emit("transform.jsonl", transform_manifest(train_, outcomes));

        auto ds = stage("dataset", [&] {
            auto params = cfg_.dataset;
            params.seed = cfg_.seed;
            return mi::build_dataset(train_, test_, rule_, params);
        });
        emit("dataset.jsonl", dataset_jsonl(ds));

        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < train_.size(); ++i) index[train_[i].id] = i;
        std::vector<java::SourceUnit> full_original, full_transformed, transformed_fit;
        std::size_t changed = 0;
        for (const auto& m : ds.members) {
            auto i = index.at(m.id);
            full_original.push_back(train_[i]);
            auto t = java::make_unit(m.id, outcomes[i].text);
            t.path = train_[i].path;
            full_transformed.push_back(t);
            transformed_fit.push_back(java::make_unit(m.id, java::truncate_words(outcomes[i].text, ds.params.max_words)));
            changed += outcomes[i].applied;
        }

        const bool remote = cfg_.provider.kind == ProviderSpec::Kind::Remote;
        std::vector<mi::ScoreRecord> s0, s1;
        double acc0 = 0, acc1 = 0;
        stage("score", [&] {
            auto original = make_provider(cfg_.provider, ds.members);
            auto transformed = remote ? original : make_provider(cfg_.provider, transformed_fit);
            s0 = score_samples(*original, ds.members, ds.nonmembers, cfg_.k, cfg_.jobs);
            // A remote model cannot be retrained here, so its treated arm
            // queries the transformed members instead.
            s1 = score_samples(*transformed, remote ? transformed_fit : ds.members, ds.nonmembers, cfg_.k, cfg_.jobs);
            acc0 = mean_accuracy(*original, ds.nonmembers, cfg_.jobs);
            acc1 = mean_accuracy(*transformed, ds.nonmembers, cfg_.jobs);
            return 0;
        });
        emit("scores_original.jsonl", mi::scores_jsonl(s0));
        emit("scores_transformed.jsonl", mi::scores_jsonl(s1));

        std::string auc0, auc1;
        stage("evaluate", [&] {
            auc0 = evaluate_jsonl(s0, cfg_.bootstrap, cfg_.seed, cfg_.jobs);
            auc1 = evaluate_jsonl(s1, cfg_.bootstrap, cfg_.seed, cfg_.jobs);
            return 0;
        });
        emit("auc_original.jsonl", auc0);
        emit("auc_transformed.jsonl", auc1);

        std::string f0, f1;
        stage("features", [&] {
            f0 = features_jsonl(full_original, cfg_.jobs);
            f1 = features_jsonl(full_transformed, cfg_.jobs);
            return 0;
        });
        emit("features_original.jsonl", f0);
        emit("features_transformed.jsonl", f1);

        auto rows = stage("causal", [&] { return build_frame(ds.members, s0, s1, parse_features(f0), parse_features(f1)); });
        emit("frame.jsonl", causal::rows_jsonl(rows));
        auto report = stage("causal", [&] { return causal::analyze(causal::relativize(rows), rule_, cfg_.seed); });
        emit("ate.json", causal::report_json(report) + "\n");

        Json summary;
        summary["rule_id"] = rule_;
        summary["rule_name"] = std::string(transform::rule(rule_).name);
        summary["n_member"] = ds.members.size();
        summary["n_nonmember"] = ds.nonmembers.size();
        summary["members_transformed"] = changed;
        Json auc = Json::object();
        for (auto m : {mi::Method::Loss, mi::Method::MinK, mi::Method::Zlib}) {
            double a = mi::auc_roc(mi::select(s0, m)), b = mi::auc_roc(mi::select(s1, m));
            auc[std::string(mi::method_name(m))] = {{"original", a}, {"transformed", b}, {"drop", a - b}};
        }
        summary["auc"] = auc;
        summary["token_accuracy"] = {{"original", number_or_null(acc0)}, {"transformed", number_or_null(acc1)}};
        emit("summary.json", summary.dump() + "\n");
    }

private:
    void emit(const std::string& rel, std::string_view text) {
        auto path = dir_ + "/" + rel;
        write_text(cfg_.out_dir / path, text);
        written_.push_back(path);
    }

    const PipelineConfig& cfg_;
    std::span<const java::SourceUnit> train_, test_;
    int rule_;
    std::vector<std::string>& written_;
    std::string dir_;
};

Json provider_json(const ProviderSpec& p) {
    if (p.kind == ProviderSpec::Kind::Remote) return {{"kind", "remote"}, {"endpoint", p.endpoint}};
    return {{"kind", "surrogate"}, {"order", p.order}, {"alpha", p.alpha}};
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    if (cfg.rules.empty()) throw ConfigError("no rules selected");
    if (cfg.out_dir.empty()) throw ConfigError("no output directory");
    if (cfg.bootstrap <= 0) throw ConfigError("--bootstrap must be positive");
    if (!(cfg.k > 0 && cfg.k <= 1)) throw ConfigError("--k must lie in (0, 1]");
    auto train = load_pool(cfg.train_dir, "train");
    auto test = load_pool(cfg.test_dir, "test");
    fs::create_directories(cfg.out_dir);

    std::vector<std::string> written;
    for (int r : cfg.rules) RuleRun(cfg, train, test, r, written).run();

    PipelineResult result;
    std::sort(written.begin(), written.end());
    Json artifacts = Json::array();
    for (const auto& rel : written) {
        auto bytes = read_text(cfg.out_dir / rel);
        Artifact a{rel, sha256_hex(bytes), bytes.size()};
        artifacts.push_back({{"path", a.path}, {"sha256", a.sha256}, {"bytes", a.bytes}});
        result.artifacts.push_back(std::move(a));
    }
    // Inputs are recorded by content so the manifest does not depend on
    // where the corpora or the output live.
    Json inputs = Json::object();
    for (auto [name, pool] : {std::pair{"train", &train}, std::pair{"test", &test}}) {
        std::string listing;
        for (const auto& u : *pool) listing += u.id + "\t" + sha256_hex(u.text) + "\n";
        inputs[name] = {{"files", pool->size()}, {"sha256", sha256_hex(listing)}};
    }
    Json manifest;
    manifest["tool"] = "sect-audit";
    manifest["version"] = SECT_VERSION;
    manifest["config"] = {{"rules", cfg.rules},
                          {"seed", cfg.seed},
                          {"provider", provider_json(cfg.provider)},
                          {"k", cfg.k},
                          {"bootstrap", cfg.bootstrap},
                          {"max_per_side", cfg.dataset.max_per_side},
                          {"min_words", cfg.dataset.min_words},
                          {"max_words", cfg.dataset.max_words}};
    manifest["inputs"] = inputs;
    manifest["artifacts"] = artifacts;
    result.manifest = manifest.dump(2) + "\n";
    write_text(cfg.out_dir / "manifest.json", result.manifest);
    return result;
}

}  // namespace sect::app

// sect-audit: command-line front end for every stage of the audit.
//
// Exit codes: 0 success, 2 configuration error, 3 stage failure.

#include <cstdio>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "sect/app/pipeline.hpp"
#include "sect/causal/causal.hpp"
#include "sect/equiv/differential.hpp"
#include "sect/mi/eval.hpp"

namespace fs = std::filesystem;
using namespace sect;
using app::ConfigError;
using app::StageError;

namespace {

void emit(const std::string& path, std::string_view text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
    } else {
        app::write_text(path, text);
    }
}

std::vector<java::SourceUnit> corpus(const std::string& dir) {
    if (!fs::is_directory(dir)) throw ConfigError("not a directory: " + dir);
    try {
        return java::load_corpus(dir);
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }
}

void require_file(const std::string& path) {
    if (!fs::is_regular_file(path)) throw ConfigError("no such file: " + path);
}

// Library errors raised while a stage runs are stage failures.
template <typename Fn>
void run_stage(const std::string& name, Fn&& fn) {
    try {
        fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

struct Common {
    std::uint64_t seed = 0;
    int jobs = 1;
};

void add_jobs(CLI::App* cmd, int& jobs) {
    cmd->add_option("--jobs", jobs, "Worker threads (default: SECT_AUDIT_JOBS or 1)")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Semantically equivalent transformations and membership-inference audit"};
    cli.require_subcommand(1);
    cli.set_version_flag("--version", std::string(SECT_VERSION));

    int jobs = 1;
    try {
        jobs = app::default_jobs();
    } catch (const ConfigError& e) {
        std::cerr << "sect-audit: " << e.what() << "\n";
        return app::kExitConfig;
    }

    // transform
    std::string t_in, t_out, t_rule, t_manifest;
    std::uint64_t t_seed = 0;
    auto* transform = cli.add_subcommand("transform", "Apply one rule (or ALL, composed) to every file of a corpus");
    transform->add_option("--in", t_in, "Corpus directory")->required();
    transform->add_option("--out", t_out, "Output directory for rewritten files")->required();
    transform->add_option("--rule", t_rule, "Rule id 1-23, or ALL")->required();
    transform->add_option("--seed", t_seed, "Seed for naming choices");
    transform->add_option("--manifest", t_manifest, "Per-file outcome JSONL (default: OUT/transform.jsonl)");
    add_jobs(transform, jobs);

    // features
    std::string f_in, f_out;
    auto* features = cli.add_subcommand("features", "Extract confounder features, one JSON line per file");
    features->add_option("--in", f_in, "Corpus directory")->required();
    features->add_option("--out", f_out, "Output file (default: stdout)");
    add_jobs(features, jobs);

    // equivcheck
    std::string e_rule = "ALL", e_snippets = SECT_SNIPPETS, e_out, e_original, e_transformed;
    std::int64_t e_trials = 100, e_steps = equiv::kDefaultStepLimit;
    std::uint64_t e_seed = 7;
    auto* equivcheck = cli.add_subcommand("equivcheck", "Differentially test rules on curated snippets or a transformed corpus");
    equivcheck->add_option("--rule", e_rule, "Rule id 1-23, or ALL");
    equivcheck->add_option("--snippets", e_snippets, "Curated snippet JSONL")->capture_default_str();
    equivcheck->add_option("--trials", e_trials, "Random inputs per snippet")->check(CLI::PositiveNumber)->capture_default_str();
    equivcheck->add_option("--seed", e_seed, "Input generator seed")->capture_default_str();
    equivcheck->add_option("--step-limit", e_steps, "Interpreter step budget per run")->check(CLI::PositiveNumber);
    auto* e_orig_opt = equivcheck->add_option("--original", e_original, "Original corpus (compare with --transformed)");
    equivcheck->add_option("--transformed", e_transformed, "Transformed corpus with the same relative paths")
        ->needs(e_orig_opt);
    e_orig_opt->needs("--transformed");
    equivcheck->add_option("--out", e_out, "Report JSONL (default: stdout)");

    // dataset
    std::string d_train, d_test, d_rule, d_out;
    mi::DatasetParams d_params;
    auto* dataset = cli.add_subcommand("dataset", "Sample member and non-member sets for a rule");
    dataset->add_option("--train", d_train, "Training (member) pool")->required();
    dataset->add_option("--test", d_test, "Held-out (non-member) pool")->required();
    dataset->add_option("--rule", d_rule, "Rule id 1-23, or ALL for any rule")->required();
    dataset->add_option("--seed", d_params.seed, "Sampling seed");
    dataset->add_option("--max-per-side", d_params.max_per_side, "Cap per side")->capture_default_str();
    dataset->add_option("--min-words", d_params.min_words, "Keep samples with more words than this")->capture_default_str();
    dataset->add_option("--max-words", d_params.max_words, "Truncate samples to this many words")->capture_default_str();
    dataset->add_option("--out", d_out, "Dataset JSONL (default: stdout)");

    // score
    std::string s_dataset, s_provider = "surrogate", s_endpoint, s_fit_dir, s_out;
    int s_order = 3;
    double s_alpha = 0.1, s_k = mi::kDefaultK;
    std::size_t s_max_words = 200;
    auto* score = cli.add_subcommand("score", "Score dataset samples with LOSS, MIN_K and ZLIB");
    score->add_option("--dataset", s_dataset, "Dataset JSONL")->required();
    score->add_option("--provider", s_provider, "surrogate or remote")->capture_default_str();
    score->add_option("--endpoint", s_endpoint, "Likelihood server, e.g. http://127.0.0.1:8000");
    score->add_option("--order", s_order, "Surrogate n-gram order")->capture_default_str();
    score->add_option("--alpha", s_alpha, "Surrogate additive smoothing")->capture_default_str();
    score->add_option("--fit-dir", s_fit_dir,
                      "Train the surrogate on the members' files from this directory (e.g. transform output) "
                      "instead of the members themselves");
    score->add_option("--max-words", s_max_words, "Truncation applied to --fit-dir files")->capture_default_str();
    score->add_option("--k", s_k, "MIN_K fraction")->capture_default_str();
    score->add_option("--out", s_out, "Scores JSONL (default: stdout)");
    add_jobs(score, jobs);

    // evaluate
    std::string v_scores, v_out;
    int v_boot = mi::kDefaultBootstrap;
    std::uint64_t v_seed = 0;
    auto* evaluate = cli.add_subcommand("evaluate", "AUC-ROC with bootstrap interval per method");
    evaluate->add_option("--scores", v_scores, "Scores JSONL")->required();
    evaluate->add_option("--bootstrap", v_boot, "Bootstrap resamples")->check(CLI::PositiveNumber)->capture_default_str();
    evaluate->add_option("--seed", v_seed, "Bootstrap seed");
    evaluate->add_option("--out", v_out, "Report JSONL (default: stdout)");
    add_jobs(evaluate, jobs);

    // causal
    std::string c_frame, c_dataset, c_s0, c_s1, c_f0, c_f1, c_frame_out, c_out;
    int c_rule = 0;
    std::uint64_t c_seed = 0;
    bool c_raw = false;
    auto* causal_cmd = cli.add_subcommand("causal", "Average treatment effect with refutations");
    causal_cmd->add_option("--frame", c_frame, "CausalRow JSONL");
    causal_cmd->add_option("--dataset", c_dataset, "Dataset JSONL (builds the frame with the four inputs below)");
    causal_cmd->add_option("--scores-original", c_s0, "Scores under the original-trained provider");
    causal_cmd->add_option("--scores-transformed", c_s1, "Scores under the transformed-trained provider");
    causal_cmd->add_option("--features-original", c_f0, "Features of the original member files");
    causal_cmd->add_option("--features-transformed", c_f1, "Features of the transformed member files");
    causal_cmd->add_option("--frame-out", c_frame_out, "Write the assembled frame here");
    causal_cmd->add_option("--rule", c_rule, "Rule id recorded in the report");
    causal_cmd->add_option("--seed", c_seed, "Refutation seed");
    causal_cmd->add_flag("--raw", c_raw, "Use outcomes as given instead of relative scores per arm");
    causal_cmd->add_option("--out", c_out, "Report JSON (default: stdout)");

    // pipeline
    app::PipelineConfig p;
    std::string p_train, p_test, p_out, p_rule, p_provider = "surrogate", p_endpoint;
    auto* pipeline = cli.add_subcommand("pipeline", "Run every stage for each selected rule and write a manifest");
    pipeline->add_option("--train", p_train, "Training (member) pool")->required();
    pipeline->add_option("--test", p_test, "Held-out (non-member) pool")->required();
    pipeline->add_option("--out", p_out, "Output directory")->required();
    pipeline->add_option("--rule", p_rule, "Rule id, comma-separated list, or ALL")->required();
    pipeline->add_option("--seed", p.seed, "Seed for every stage");
    pipeline->add_option("--provider", p_provider, "surrogate or remote")->capture_default_str();
    pipeline->add_option("--endpoint", p_endpoint, "Likelihood server for --provider remote");
    pipeline->add_option("--order", p.provider.order, "Surrogate n-gram order")->capture_default_str();
    pipeline->add_option("--alpha", p.provider.alpha, "Surrogate additive smoothing")->capture_default_str();
    pipeline->add_option("--k", p.k, "MIN_K fraction")->capture_default_str();
    pipeline->add_option("--bootstrap", p.bootstrap, "Bootstrap resamples")->check(CLI::PositiveNumber)->capture_default_str();
    pipeline->add_option("--max-per-side", p.dataset.max_per_side, "Dataset cap per side")->capture_default_str();
    add_jobs(pipeline, jobs);

    try {
        cli.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return cli.exit(e);
    } catch (const CLI::ParseError& e) {
        cli.exit(e);
        return app::kExitConfig;
    }

    try {
        if (transform->parsed()) {
            int rule = app::parse_rule_or_all(t_rule);
            auto units = corpus(t_in);
            run_stage("transform", [&] {
                auto outcomes = app::transform_units(units, rule, t_seed, jobs);
                app::write_units(t_out, units, outcomes);
                emit(t_manifest.empty() ? (fs::path(t_out) / "transform.jsonl").string() : t_manifest,
                     app::transform_manifest(units, outcomes));
            });
        } else if (features->parsed()) {
            auto units = corpus(f_in);
            run_stage("features", [&] { emit(f_out, app::features_jsonl(units, jobs)); });
        } else if (equivcheck->parsed()) {
            std::string report;
            bool failed = false;
            if (!e_original.empty()) {
                auto before = corpus(e_original);
                auto after = corpus(e_transformed);
                std::map<std::string, const java::SourceUnit*> by_id;
                for (const auto& u : after) by_id[u.id] = &u;
                run_stage("equivcheck", [&] {
                    for (std::size_t i = 0; i < before.size(); ++i) {
                        auto it = by_id.find(before[i].id);
                        if (it == by_id.end()) throw InvalidInput("no transformed file for " + before[i].id);
                        auto d = equiv::check_unit(before[i].text, it->second->text, e_trials, e_seed + i, e_steps);
                        failed |= !d.pass();
                        nlohmann::ordered_json j;
                        j["id"] = before[i].id;
                        j["trials"] = d.trials;
                        j["passed"] = d.passed;
                        j["failed"] = d.failed;
                        j["skipped"] = d.skipped;
                        report += j.dump() + "\n";
                    }
                });
            } else {
                int rule = app::parse_rule_or_all(e_rule);
                require_file(e_snippets);
                run_stage("equivcheck", [&] {
                    std::map<int, std::vector<equiv::SnippetSpec>> by_rule;
                    for (auto& s : equiv::load_snippets(e_snippets)) {
                        if (rule == transform::kAllRules || s.rule_id == rule) by_rule[s.rule_id].push_back(std::move(s.spec));
                    }
                    if (by_rule.empty()) throw InvalidInput("no snippets for the selected rule");
                    for (const auto& [id, specs] : by_rule) {
                        auto c = equiv::check_rule(id, specs, e_trials, e_seed, e_steps);
                        failed |= !c.diff.pass();
                        report += equiv::report_json(c) + "\n";
                    }
                });
            }
            emit(e_out, report);
            if (failed) throw StageError("equivcheck", "behavioural mismatches found");
        } else if (dataset->parsed()) {
            int rule = app::parse_rule_or_all(d_rule);
            if (d_params.max_words <= d_params.min_words) throw ConfigError("--max-words must exceed --min-words");
            auto train = corpus(d_train);
            auto test = corpus(d_test);
            run_stage("dataset", [&] { emit(d_out, app::dataset_jsonl(mi::build_dataset(train, test, rule, d_params))); });
        } else if (score->parsed()) {
            require_file(s_dataset);
            auto spec = app::parse_provider(s_provider, s_order, s_alpha, s_endpoint);
            if (!(s_k > 0 && s_k <= 1)) throw ConfigError("--k must lie in (0, 1]");
            std::vector<java::SourceUnit> fit_files;
            if (!s_fit_dir.empty()) fit_files = corpus(s_fit_dir);
            run_stage("score", [&] {
                auto ds = app::parse_dataset(app::read_text(s_dataset));
                std::vector<java::SourceUnit> fit = ds.members;
                if (!s_fit_dir.empty()) {
                    std::map<std::string, const java::SourceUnit*> by_id;
                    for (const auto& u : fit_files) by_id[u.id] = &u;
                    fit.clear();
                    for (const auto& m : ds.members) {
                        auto it = by_id.find(m.id);
                        if (it == by_id.end()) throw InvalidInput("--fit-dir has no file for member " + m.id);
                        fit.push_back(java::make_unit(m.id, java::truncate_words(it->second->text, s_max_words)));
                    }
                }
                auto provider = app::make_provider(spec, fit);
                emit(s_out, mi::scores_jsonl(app::score_samples(*provider, ds.members, ds.nonmembers, s_k, jobs)));
            });
        } else if (evaluate->parsed()) {
            require_file(v_scores);
            run_stage("evaluate", [&] {
                emit(v_out, app::evaluate_jsonl(mi::parse_scores(app::read_text(v_scores)), v_boot, v_seed, jobs));
            });
        } else if (causal_cmd->parsed()) {
            bool assemble = !c_dataset.empty();
            if (assemble == !c_frame.empty()) throw ConfigError("give either --frame or --dataset with scores and features");
            for (const auto* f : assemble ? std::vector<const std::string*>{&c_dataset, &c_s0, &c_s1, &c_f0, &c_f1}
                                          : std::vector<const std::string*>{&c_frame}) {
                if (f->empty()) throw ConfigError("--dataset needs --scores-original, --scores-transformed, "
                                                  "--features-original and --features-transformed");
                require_file(*f);
            }
            run_stage("causal", [&] {
                std::vector<causal::CausalRow> rows;
                if (assemble) {
                    auto ds = app::parse_dataset(app::read_text(c_dataset));
                    rows = app::build_frame(ds.members, mi::parse_scores(app::read_text(c_s0)),
                                            mi::parse_scores(app::read_text(c_s1)),
                                            app::parse_features(app::read_text(c_f0)),
                                            app::parse_features(app::read_text(c_f1)));
                    if (!c_frame_out.empty()) emit(c_frame_out, causal::rows_jsonl(rows));
                } else {
                    rows = causal::parse_rows(app::read_text(c_frame));
                }
                auto used = c_raw ? rows : causal::relativize(rows);
                emit(c_out, causal::report_json(causal::analyze(used, c_rule, c_seed)) + "\n");
            });
        } else if (pipeline->parsed()) {
            p.train_dir = p_train;
            p.test_dir = p_test;
            p.out_dir = p_out;
            p.rules = app::parse_rule_list(p_rule);
            auto order = p.provider.order;
            auto alpha = p.provider.alpha;
            p.provider = app::parse_provider(p_provider, order, alpha, p_endpoint);
            p.jobs = jobs;
            auto result = app::run_pipeline(p);
            std::cout << (fs::path(p_out) / "manifest.json").string() << " (" << result.artifacts.size()
                      << " artifacts)\n";
        }
    } catch (const ConfigError& e) {
        std::cerr << "sect-audit: " << e.what() << "\n";
        return app::kExitConfig;
    } catch (const StageError& e) {
        std::cerr << "sect-audit: " << e.what() << "\n";
        return app::kExitStage;
    } catch (const std::exception& e) {
        std::cerr << "sect-audit: " << e.what() << "\n";
        return app::kExitStage;
    }
    return app::kExitOk;
}

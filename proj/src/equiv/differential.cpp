#include "sect/equiv/differential.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "sect/error.hpp"
#include "sect/transform/rules.hpp"

namespace sect::equiv {

namespace {

constexpr std::array<std::string_view, 8> kPool = {"", "a", "alpha", "beta", "gamma", "ready", "busy", "Alpha"};

template <typename T>
T draw_int(std::mt19937_64& rng) {
    // One draw in four is a boundary value.
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        const std::array<T, 5> edges = {std::numeric_limits<T>::min(), -1, 0, 1, std::numeric_limits<T>::max()};
        return edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    }
    return static_cast<T>(std::uniform_int_distribution<int>(-100, 100)(rng));
}

bool skipped(const ExecResult& r) { return r.is_trap(Trap::Unsupported); }

void check_signatures(const SnippetSpec& a, const SnippetSpec& b) {
    bool same = a.return_type == b.return_type && a.params.size() == b.params.size();
    for (std::size_t i = 0; same && i < a.params.size(); ++i) same = a.params[i].type == b.params[i].type;
    if (!same) throw InvalidInput("snippet signatures differ");
}

using Json = nlohmann::ordered_json;

Json value_json(const Value& v) {
    switch (type_of(v)) {
        case JType::Int: return std::get<std::int32_t>(v);
        case JType::Long: return std::get<std::int64_t>(v);
        case JType::Boolean: return std::get<bool>(v);
        case JType::String: return std::get<std::string>(v);
        case JType::IntArray: return std::get<std::vector<std::int32_t>>(v);
    }
    return nullptr;
}

}  // namespace

std::span<const std::string_view> string_pool() { return kPool; }

std::vector<Value> random_args(std::span<const Param> params, std::mt19937_64& rng) {
    std::vector<Value> out;
    out.reserve(params.size());
    for (const auto& p : params) {
        switch (p.type) {
            case JType::Int:
                out.emplace_back(draw_int<std::int32_t>(rng));
                break;
            case JType::Long:
                out.emplace_back(draw_int<std::int64_t>(rng));
                break;
            case JType::Boolean:
                out.emplace_back(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
                break;
            case JType::String:
                out.emplace_back(std::string(kPool[std::uniform_int_distribution<std::size_t>(0, kPool.size() - 1)(rng)]));
                break;
            case JType::IntArray: {
                std::vector<std::int32_t> a(std::uniform_int_distribution<std::size_t>(0, 8)(rng));
                for (auto& x : a) x = draw_int<std::int32_t>(rng);
                out.emplace_back(std::move(a));
                break;
            }
        }
    }
    return out;
}

void DiffReport::merge(const DiffReport& other) {
    trials += other.trials;
    passed += other.passed;
    failed += other.failed;
    skipped += other.skipped;
    if (!first_failure && other.first_failure) first_failure = other.first_failure;
}

DiffReport differential_test(const SnippetSpec& original, const SnippetSpec& transformed, std::int64_t trials,
                             std::uint64_t seed, std::int64_t step_limit) {
    if (trials <= 0) throw InvalidInput("trials must be positive");
    check_signatures(original, transformed);
    Program a(original), b(transformed);
    std::mt19937_64 rng(seed);
    DiffReport report;
    for (std::int64_t i = 0; i < trials; ++i) {
        auto args = random_args(original.params, rng);
        auto ra = a.run(args, step_limit);
        auto rb = b.run(args, step_limit);
        ++report.trials;
        if (skipped(ra) || skipped(rb)) {
            ++report.skipped;
        } else if (ra == rb) {
            ++report.passed;
        } else {
            ++report.failed;
            if (!report.first_failure) report.first_failure = Mismatch{i, std::move(args), std::move(ra), std::move(rb)};
        }
    }
    return report;
}

std::vector<CuratedSnippet> parse_snippets(std::string_view jsonl) {
    std::vector<CuratedSnippet> out;
    std::istringstream in{std::string(jsonl)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto where = "snippet line " + std::to_string(line_no);
        try {
            auto j = nlohmann::json::parse(line);
            CuratedSnippet s;
            s.rule_id = j.at("rule_id").get<int>();
            auto ret = parse_type(j.at("return").get<std::string>());
            if (!ret) throw InvalidInput(where + ": unsupported return type");
            s.spec.return_type = *ret;
            for (const auto& p : j.at("params")) {
                auto t = parse_type(p.at(1).get<std::string>());
                if (!t) throw InvalidInput(where + ": unsupported parameter type");
                s.spec.params.push_back({p.at(0).get<std::string>(), *t});
            }
            s.spec.body = j.at("body").get<std::string>();
            out.push_back(std::move(s));
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(where + ": " + e.what());
        }
    }
    return out;
}

std::vector<CuratedSnippet> load_snippets(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_snippets(ss.str());
}

RuleCheck check_rule(int rule_id, std::span<const SnippetSpec> snippets, std::int64_t trials, std::uint64_t seed,
                     std::int64_t step_limit) {
    const auto& r = transform::rule(rule_id);
    RuleCheck check;
    check.rule_id = rule_id;
    for (const auto& spec : snippets) {
        ++check.snippets;
        auto outcome = transform::apply_rule(r, java::parse(wrap(spec)), seed);
        if (!outcome.applied) ++check.not_applied;
        auto methods = static_methods(java::parse(outcome.text));
        if (methods.size() != 1) throw InternalRewriteError(rule_id, "snippet", "rewrite lost the snippet method");
        auto diff = differential_test(spec, methods[0].spec, trials, seed, step_limit);
        if (diff.first_failure && !check.diff.first_failure) {
            check.failing_original = spec.body;
            check.failing_transformed = methods[0].spec.body;
        }
        check.diff.merge(diff);
    }
    return check;
}

DiffReport check_unit(std::string_view original, std::string_view transformed, std::int64_t trials,
                      std::uint64_t seed, std::int64_t step_limit) {
    auto before = static_methods(java::parse(std::string(original)));
    auto after = static_methods(java::parse(std::string(transformed)));
    DiffReport report;
    bool same_shape = before.size() == after.size();
    for (std::size_t i = 0; same_shape && i < before.size(); ++i) same_shape = before[i].name == after[i].name;
    if (!same_shape) {
        report.trials = report.failed = 1;
        report.first_failure = Mismatch{};
        return report;
    }
    for (std::size_t i = 0; i < before.size(); ++i) {
        report.merge(differential_test(before[i].spec, after[i].spec, trials, seed + i, step_limit));
    }
    return report;
}

std::string report_json(const RuleCheck& check) {
    Json j;
    j["rule_id"] = check.rule_id;
    j["snippets"] = check.snippets;
    j["trials"] = check.diff.trials;
    j["passed"] = check.diff.passed;
    j["failed"] = check.diff.failed;
    j["skipped"] = check.diff.skipped;
    if (check.diff.first_failure) {
        const auto& f = *check.diff.first_failure;
        Json args = Json::array();
        for (const auto& a : f.args) args.push_back(value_json(a));
        j["first_failure"] = {{"trial", f.trial},
                              {"original", check.failing_original},
                              {"transformed", check.failing_transformed},
                              {"args", args},
                              {"original_result", to_string(f.original)},
                              {"transformed_result", to_string(f.transformed)}};
    } else {
        j["first_failure"] = nullptr;
    }
    j["not_applied"] = check.not_applied;
    return j.dump();
}

}  // namespace sect::equiv

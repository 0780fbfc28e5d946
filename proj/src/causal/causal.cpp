#include "sect/causal/causal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "sect/error.hpp"
#include "sect/random.hpp"

namespace sect::causal {

namespace {

constexpr std::array<std::string_view, 7> kFeatureNames = {
    "nloc", "token_count", "ast_levels", "ast_nodes", "identifier_count", "ast_error_count", "code_complexity"};

// A column is collinear when less than this fraction of its norm survives
// projection onto the columns already kept.
constexpr double kCollinear = 1e-8;

using Vec = Eigen::VectorXd;

Vec to_vec(const std::vector<double>& v) { return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size())); }

void check_frame(const Frame& f) {
    auto n = f.t.size();
    if (f.y.size() != n || static_cast<std::size_t>(f.z.rows()) != n) throw InvalidInput("frame columns differ in length");
    if (static_cast<std::size_t>(f.z.cols()) != f.z_names.size()) throw InvalidInput("frame confounder names mismatch");
    bool arm0 = false, arm1 = false;
    for (double t : f.t) {
        if (t == 0) arm0 = true;
        else if (t == 1) arm1 = true;
        else throw InvalidInput("treatment must be 0 or 1");
    }
    if (!arm0 || !arm1) throw InvalidInput("both treatment arms must be present");
    for (double y : f.y) {
        if (!std::isfinite(y)) throw InvalidInput("outcomes must be finite");
    }
    if (!f.z.allFinite()) throw InvalidInput("confounders must be finite");
}

// Removes from `c` its projection onto the orthonormal columns of `basis`,
// twice for numerical safety.
Vec residual(const std::vector<Vec>& basis, Vec c) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) c -= q.dot(c) * q;
    }
    return c;
}

Vec centered_unit(Vec v) {
    v.array() -= v.mean();
    double norm = v.norm();
    if (norm > 0) v /= norm;
    return v;
}

Frame with_column(const Frame& f, const std::vector<double>& col, std::string name) {
    Frame g = f;
    g.z.conservativeResize(Eigen::NoChange, f.z.cols() + 1);
    g.z.col(f.z.cols()) = to_vec(col);
    g.z_names.push_back(std::move(name));
    return g;
}

Frame subset(const Frame& f, const std::vector<std::size_t>& rows) {
    Frame g;
    g.z_names = f.z_names;
    g.z.resize(static_cast<Eigen::Index>(rows.size()), f.z.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        g.t.push_back(f.t[rows[i]]);
        g.y.push_back(f.y[rows[i]]);
        g.z.row(static_cast<Eigen::Index>(i)) = f.z.row(static_cast<Eigen::Index>(rows[i]));
    }
    return g;
}

bool within_shift(double base, double perturbed) {
    return std::abs(perturbed - base) <= std::max(kShiftTolerance, 0.1 * std::abs(base));
}

using Json = nlohmann::ordered_json;

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string_view outcome_name(Outcome outcome) {
    switch (outcome) {
        case Outcome::Y0: return "Y0";
        case Outcome::Y1: return "Y1";
        case Outcome::Y2: return "Y2";
    }
    return "?";
}

std::span<const std::string_view> feature_names() { return kFeatureNames; }

std::array<double, 7> feature_values(const java::CodeFeatures& z) {
    return {static_cast<double>(z.nloc),           static_cast<double>(z.token_count),
            static_cast<double>(z.ast_levels),     static_cast<double>(z.ast_nodes),
            static_cast<double>(z.identifier_count), static_cast<double>(z.ast_error_count),
            static_cast<double>(z.code_complexity)};
}

std::vector<double> relative_scores(std::span<const double> values, double epsilon) {
    if (values.empty()) throw InvalidInput("relative scores need at least one value");
    if (!(epsilon > 0)) throw InvalidInput("epsilon must be positive");
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double min = *lo, span = *hi - *lo + epsilon;
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back((v - min) / span);
    return out;
}

std::vector<CausalRow> relativize(std::span<const CausalRow> rows, double epsilon) {
    std::vector<CausalRow> out(rows.begin(), rows.end());
    for (int arm : {0, 1}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].treatment == arm) idx.push_back(i);
        }
        if (idx.empty()) continue;
        for (std::size_t k = 0; k < 3; ++k) {
            std::vector<double> v;
            for (auto i : idx) v.push_back(rows[i].y[k]);
            auto r = relative_scores(v, epsilon);
            for (std::size_t j = 0; j < idx.size(); ++j) out[idx[j]].y[k] = r[j];
        }
    }
    return out;
}

Frame make_frame(std::span<const CausalRow> rows, Outcome outcome) {
    Frame f;
    f.z.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(kFeatureNames.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        f.t.push_back(rows[i].treatment);
        f.y.push_back(rows[i].y[static_cast<std::size_t>(outcome)]);
        auto z = feature_values(rows[i].z);
        for (std::size_t c = 0; c < z.size(); ++c) f.z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = z[c];
    }
    f.z_names.assign(kFeatureNames.begin(), kFeatureNames.end());
    return f;
}

AteFit estimate_ate(const Frame& f) {
    check_frame(f);
    const auto n = static_cast<Eigen::Index>(f.t.size());
    AteFit fit;
    std::vector<Vec> cols = {Vec::Ones(n), to_vec(f.t)};
    std::vector<Vec> basis;
    for (const auto& c : cols) {
        auto r = residual(basis, c);
        basis.push_back(r / r.norm());
    }
    for (Eigen::Index j = 0; j < f.z.cols(); ++j) {
        Vec c = f.z.col(j);
        if (c.maxCoeff() == c.minCoeff()) {
            fit.dropped.push_back(f.z_names[static_cast<std::size_t>(j)]);
            continue;
        }
        // Standardized, so the collinearity threshold does not depend on units.
        c = centered_unit(c);
        auto r = residual(basis, c);
        if (r.norm() < kCollinear) {
            fit.dropped.push_back(f.z_names[static_cast<std::size_t>(j)]);
            continue;
        }
        basis.push_back(r / r.norm());
        cols.push_back(c);
    }
    Eigen::MatrixXd x(n, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) x.col(static_cast<Eigen::Index>(j)) = cols[j];
    Vec beta = x.colPivHouseholderQr().solve(to_vec(f.y));
    fit.ate = beta(1);
    if (!std::isfinite(fit.ate)) throw Error("least-squares fit produced a non-finite effect");
    return fit;
}

std::optional<double> pearson(const Frame& f) {
    check_frame(f);
    const double n = static_cast<double>(f.t.size());
    const double mt = std::accumulate(f.t.begin(), f.t.end(), 0.0) / n;
    const double my = std::accumulate(f.y.begin(), f.y.end(), 0.0) / n;
    double sty = 0, stt = 0, syy = 0;
    for (std::size_t i = 0; i < f.t.size(); ++i) {
        double dt = f.t[i] - mt, dy = f.y[i] - my;
        sty += dt * dy;
        stt += dt * dt;
        syy += dy * dy;
    }
    if (syy == 0) return std::nullopt;
    return std::clamp(sty / std::sqrt(stt * syy), -1.0, 1.0);
}

std::string_view refuter_name(Refuter r) {
    switch (r) {
        case Refuter::R1: return "R1";
        case Refuter::R2: return "R2";
        case Refuter::R3: return "R3";
        case Refuter::R4: return "R4";
    }
    return "?";
}

std::vector<double> synthetic_confounder(const Frame& f, double target, std::uint64_t seed) {
    check_frame(f);
    if (!(target > 0 && target < 1)) throw InvalidInput("target correlation must lie in (0, 1)");
    const auto n = static_cast<Eigen::Index>(f.t.size());
    if (n < 4) throw InvalidInput("synthetic confounder needs at least 4 rows");
    Vec a = centered_unit(to_vec(f.t));
    Vec b = centered_unit(to_vec(f.y));
    const bool y_constant = b.norm() == 0;
    const double rho = y_constant ? 0.0 : a.dot(b);

    std::mt19937_64 rng(seed);
    Vec e(n);
    for (Eigen::Index i = 0; i < n; ++i) e(i) = draw_normal(rng);
    std::vector<Vec> basis = {Vec::Ones(n) / std::sqrt(static_cast<double>(n)), a};
    if (!y_constant) {
        Vec b_perp = residual(basis, b);
        if (b_perp.norm() > kCollinear) basis.push_back(b_perp / b_perp.norm());
    }
    e = residual(basis, e);
    e /= e.norm();

    // With unit vectors a, b and e orthogonal to both:
    //   corr(s*(a + b) + c*e, a) = s(1 + rho) / sqrt(2 s^2 (1 + rho) + c^2).
    const double t2 = target * target;
    Vec u;
    if (!y_constant && (1 + rho) / t2 >= 2) {
        double c = std::sqrt((1 + rho) * (1 + rho) / t2 - 2 * (1 + rho));
        u = (a + b) + c * e;
    } else {
        u = a + std::sqrt(1 / t2 - 1) * e;
    }
    u *= std::sqrt(static_cast<double>(n));
    return {u.data(), u.data() + u.size()};
}

Refutation refute(const Frame& f, Refuter method, std::uint64_t seed) {
    const double base = estimate_ate(f).ate;
    Refutation r;
    r.method = method;
    std::mt19937_64 rng(seed);
    switch (method) {
        case Refuter::R1: {
            std::vector<double> noise(f.t.size());
            for (auto& v : noise) v = draw_normal(rng);
            r.new_value = estimate_ate(with_column(f, noise, "random_common_cause")).ate;
            r.passed = within_shift(base, r.new_value);
            break;
        }
        case Refuter::R2: {
            Frame g = f;
            auto perm = permutation(f.t.size(), rng);
            for (std::size_t i = 0; i < perm.size(); ++i) g.t[i] = f.t[perm[i]];
            r.new_value = estimate_ate(g).ate;
            r.passed = std::abs(r.new_value) <= kPlaceboTolerance;
            break;
        }
        case Refuter::R3: {
            auto u = synthetic_confounder(f, kConfounderCorrelation, seed);
            r.new_value = estimate_ate(with_column(f, u, "unobserved_confounder")).ate;
            r.passed = within_shift(base, r.new_value);
            break;
        }
        case Refuter::R4: {
            const auto keep = static_cast<std::size_t>(std::floor(0.8 * static_cast<double>(f.t.size())));
            std::vector<double> ates;
            for (int i = 0; i < kSubsets; ++i) {
                std::mt19937_64 sub(seed + static_cast<std::uint64_t>(i));
                ates.push_back(estimate_ate(subset(f, sample_indices(f.t.size(), keep, sub))).ate);
            }
            const double mean = std::accumulate(ates.begin(), ates.end(), 0.0) / kSubsets;
            double ss = 0;
            for (double a : ates) ss += (a - mean) * (a - mean);
            r.new_value = mean;
            r.std_dev = std::sqrt(ss / (kSubsets - 1));
            r.passed = *r.std_dev <= kSubsetStdTolerance;
            break;
        }
    }
    return r;
}

AteReport analyze(std::span<const CausalRow> rows, int rule_id, std::uint64_t seed) {
    AteReport report;
    report.rule_id = rule_id;
    report.n_rows = rows.size();
    report.seed = seed;
    for (auto o : kOutcomes) {
        auto frame = make_frame(rows, o);
        auto fit = estimate_ate(frame);
        OutcomeReport out;
        out.outcome = o;
        out.ate = fit.ate;
        out.dropped = fit.dropped;
        out.p = pearson(frame);
        for (std::size_t i = 0; i < kRefuters.size(); ++i) out.refutations[i] = refute(frame, kRefuters[i], seed);
        report.outcomes.push_back(std::move(out));
    }
    return report;
}

std::string report_json(const AteReport& report) {
    Json j;
    j["rule_id"] = report.rule_id;
    j["estimator"] = report.estimator;
    j["n_rows"] = report.n_rows;
    j["seed"] = report.seed;
    Json outcomes = Json::object();
    for (const auto& o : report.outcomes) {
        Json block;
        block["p"] = optional_json(o.p);
        block["ate"] = o.ate;
        block["dropped"] = o.dropped;
        Json refs = Json::object();
        for (const auto& r : o.refutations) {
            Json rj;
            rj["new_value"] = r.new_value;
            rj["passed"] = r.passed;
            if (r.std_dev) rj["std"] = *r.std_dev;
            refs[std::string(refuter_name(r.method))] = rj;
        }
        block["refutations"] = refs;
        outcomes[std::string(outcome_name(o.outcome))] = block;
    }
    j["outcomes"] = outcomes;
    return j.dump();
}

std::string rows_jsonl(std::span<const CausalRow> rows) {
    std::string out;
    for (const auto& r : rows) {
        Json j;
        j["unit_id"] = r.unit_id;
        j["T"] = r.treatment;
        for (auto o : kOutcomes) j[std::string(outcome_name(o))] = r.y[static_cast<std::size_t>(o)];
        Json z;
        auto v = feature_values(r.z);
        for (std::size_t c = 0; c < v.size(); ++c) z[std::string(kFeatureNames[c])] = static_cast<std::int64_t>(v[c]);
        j["Z"] = z;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<CausalRow> parse_rows(std::string_view jsonl) {
    std::vector<CausalRow> out;
    std::istringstream in{std::string(jsonl)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto where = "frame line " + std::to_string(line_no);
        try {
            auto j = nlohmann::json::parse(line);
            CausalRow r;
            r.unit_id = j.at("unit_id").get<std::string>();
            r.treatment = j.at("T").get<int>();
            if (r.treatment != 0 && r.treatment != 1) throw InvalidInput(where + ": T must be 0 or 1");
            for (auto o : kOutcomes) {
                r.y[static_cast<std::size_t>(o)] = j.at(std::string(outcome_name(o))).get<double>();
                if (!std::isfinite(r.y[static_cast<std::size_t>(o)])) throw InvalidInput(where + ": outcome not finite");
            }
            const auto& z = j.at("Z");
            r.z.nloc = z.at("nloc").get<std::int64_t>();
            r.z.token_count = z.at("token_count").get<std::int64_t>();
            r.z.ast_levels = z.at("ast_levels").get<std::int64_t>();
            r.z.ast_nodes = z.at("ast_nodes").get<std::int64_t>();
            r.z.identifier_count = z.at("identifier_count").get<std::int64_t>();
            r.z.ast_error_count = z.at("ast_error_count").get<std::int64_t>();
            r.z.code_complexity = z.at("code_complexity").get<std::int64_t>();
            out.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(where + ": " + e.what());
        }
    }
    return out;
}

}  // namespace sect::causal

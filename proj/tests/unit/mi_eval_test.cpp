#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sect/error.hpp"
#include "sect/mi/eval.hpp"
#include "sect/mi/surrogate.hpp"
#include "sect/transform/rules.hpp"

namespace sect::mi {
namespace {

std::vector<ScoreRecord> labelled(const std::vector<double>& members, const std::vector<double>& nonmembers) {
    std::vector<ScoreRecord> out;
    for (std::size_t i = 0; i < members.size(); ++i) out.push_back({"m" + std::to_string(i), Method::Loss, members[i], true});
    for (std::size_t i = 0; i < nonmembers.size(); ++i) {
        out.push_back({"n" + std::to_string(i), Method::Loss, nonmembers[i], false});
    }
    return out;
}

// Exhaustive pair count.
double pair_oracle(std::span<const ScoreRecord> s) {
    double num = 0, pairs = 0;
    for (const auto& a : s) {
        if (!a.is_member) continue;
        for (const auto& b : s) {
            if (b.is_member) continue;
            pairs += 1;
            num += a.value < b.value ? 1.0 : a.value == b.value ? 0.5 : 0.0;
        }
    }
    return num / pairs;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(Auc, Examples) {
    EXPECT_DOUBLE_EQ(auc_roc(labelled({0.1, 0.2}, {0.8, 0.9})), 1.0);
    EXPECT_DOUBLE_EQ(auc_roc(labelled({0.2, 0.4}, {0.3, 0.5})), 0.75);
    EXPECT_DOUBLE_EQ(auc_roc(labelled({1, 1, 1}, {1, 1})), 0.5);
    EXPECT_DOUBLE_EQ(auc_roc(labelled({0.9}, {0.1})), 0.0);
}

TEST(Auc, MatchesExhaustivePairCount) {
    std::mt19937_64 rng(17);
    for (std::size_t nm : {1, 2, 7, 50, 200}) {
        for (std::size_t nn : {1, 3, 64, 200}) {
            for (bool coarse : {false, true}) {
                std::vector<double> m(nm), n(nn);
                std::normal_distribution<double> z(0, 1);
                // Coarse values force many ties.
                auto draw = [&](double shift) { return coarse ? std::round(z(rng) + shift) : z(rng) + shift; };
                for (auto& v : m) v = draw(0.0);
                for (auto& v : n) v = draw(0.5);
                auto s = labelled(m, n);
                EXPECT_NEAR(auc_roc(s), pair_oracle(s), 1e-12) << nm << "x" << nn << coarse;
            }
        }
    }
}

TEST(Auc, InvariantUnderIncreasingTransformAndFlips) {
    std::mt19937_64 rng(3);
    std::vector<double> m(40), n(45);
    for (auto& v : m) v = std::uniform_real_distribution<double>(0, 3)(rng);
    for (auto& v : n) v = std::uniform_real_distribution<double>(1, 4)(rng);
    auto base = auc_roc(labelled(m, n));
    auto mapped = labelled(m, n);
    for (auto& r : mapped) r.value = std::exp(2 * r.value) + 7;
    EXPECT_EQ(auc_roc(mapped), base);
    for (auto& r : mapped) r.value = -r.value;
    EXPECT_NEAR(auc_roc(mapped), 1 - base, 1e-15);
}

TEST(Auc, RejectsSingleClass) {
    EXPECT_THROW(auc_roc(labelled({1, 2}, {})), InvalidInput);
    EXPECT_THROW(auc_roc(labelled({}, {1})), InvalidInput);
    EXPECT_THROW(bootstrap_auc(labelled({1}, {}), 10, 1), InvalidInput);
    EXPECT_THROW(bootstrap_auc(labelled({1}, {2}), 0, 1), InvalidInput);
}

TEST(Bootstrap, SeparatedDataStaysSeparated) {
    auto r = bootstrap_auc(labelled({0.1, 0.2, 0.3}, {0.7, 0.8}), 200, 5);
    EXPECT_EQ(r.auc, 1.0);
    EXPECT_EQ(r.bootstrap_mean, 1.0);
    EXPECT_EQ(r.ci_low, 1.0);
    EXPECT_EQ(r.ci_high, 1.0);
}

TEST(Bootstrap, SingleResampleIsItsOwnAuc) {
    std::vector<double> m = {0.3, 1.2, 0.8, 0.5}, n = {0.9, 0.4, 1.5};
    const std::uint64_t seed = 21;
    // The one resample, redrawn by hand: engine seed + 0, members then non-members.
    std::mt19937_64 rng(seed);
    std::vector<double> rm, rn;
    for (std::size_t i = 0; i < m.size(); ++i) rm.push_back(m[draw_below(m.size(), rng)]);
    for (std::size_t i = 0; i < n.size(); ++i) rn.push_back(n[draw_below(n.size(), rng)]);
    auto r = bootstrap_auc(labelled(m, n), 1, seed);
    EXPECT_EQ(r.bootstrap_mean, auc_roc(labelled(rm, rn)));
    EXPECT_EQ(r.ci_low, r.bootstrap_mean);
    EXPECT_EQ(r.ci_high, r.bootstrap_mean);
}

TEST(Bootstrap, FixtureMeanNearPointAuc) {
    auto scores = parse_scores(read_file(SECT_TEST_DATA "/scores_fixture.jsonl"));
    ASSERT_EQ(scores.size(), 300u);
    auto r = bootstrap_auc(scores, kDefaultBootstrap, 42);
    // Point AUC from an exhaustive pair count over the fixture.
    EXPECT_NEAR(r.auc, 0.7213777777777778, 1e-12);
    EXPECT_NEAR(r.bootstrap_mean, r.auc, 0.02);
    EXPECT_LE(r.ci_low, r.bootstrap_mean);
    EXPECT_LE(r.bootstrap_mean, r.ci_high);
    EXPECT_EQ(r.n_member, 150u);
    EXPECT_EQ(r.n_nonmember, 150u);
    auto threaded = bootstrap_auc(scores, kDefaultBootstrap, 42, 4);
    EXPECT_EQ(threaded.bootstrap_mean, r.bootstrap_mean);
    EXPECT_EQ(threaded.ci_low, r.ci_low);
    EXPECT_EQ(threaded.ci_high, r.ci_high);
    EXPECT_NE(bootstrap_auc(scores, kDefaultBootstrap, 43).bootstrap_mean, r.bootstrap_mean);
}

TEST(Bootstrap, ReportJsonKeyOrder) {
    RocResult r;
    r.auc = 0.75;
    r.bootstrap_mean = 0.74;
    r.ci_low = 0.6;
    r.ci_high = 0.9;
    r.n_member = 3;
    r.n_nonmember = 3;
    r.seed = 42;
    EXPECT_EQ(report_json(Method::MinK, r),
              "{\"method\":\"MIN_K\",\"auc\":0.75,\"bootstrap_mean\":0.74,\"ci\":[0.6,0.9],\"n_member\":3,"
              "\"n_nonmember\":3,\"seed\":42}");
}

TEST(Scores, JsonlRoundTrip) {
    std::vector<ScoreRecord> s = {{"a/B.java", Method::Zlib, 0.012345678901234567, true},
                                  {"c", Method::Loss, 3.0, false}};
    auto text = scores_jsonl(s);
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "{\"id\":\"a/B.java\",\"method\":\"ZLIB\",\"value\":0.012345678901234567,\"is_member\":true}");
    auto back = parse_scores(text);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0].value, s[0].value);
    EXPECT_EQ(back[1].method, Method::Loss);
    EXPECT_EQ(select(back, Method::Zlib).size(), 1u);
    EXPECT_THROW(parse_scores("{\"id\":\"x\",\"method\":\"BAD\",\"value\":1,\"is_member\":true}"), InvalidInput);
    EXPECT_THROW(parse_scores("{\"id\":\"x\"}"), InvalidInput);
}

TEST(TokenAccuracy, Examples) {
    std::vector<std::string> a = {"a", "b", "c"}, b = {"a", "x", "c"};
    EXPECT_EQ(token_accuracy(a, a), 1.0);
    EXPECT_DOUBLE_EQ(token_accuracy(a, b), 2.0 / 3.0);
    EXPECT_THROW(token_accuracy(a, std::vector<std::string>{"a"}), InvalidInput);
    EXPECT_THROW(token_accuracy({}, {}), InvalidInput);
}

TEST(TokenAccuracy, SurrogateCompletionMatchesPositionCount) {
    auto train = java::load_corpus(SECT_TEST_DATA "/corpus/train");
    auto model = NgramModel::train(train);
    auto test = java::load_corpus(SECT_TEST_DATA "/corpus/test");
    for (const auto* corpus : {&train, &test}) {
        for (std::size_t u = 0; u < 5; ++u) {
            auto ref = lexical_tokens((*corpus)[u].text);
            auto pred = model->predict((*corpus)[u].text);
            ASSERT_EQ(ref.size(), pred.size());
            std::size_t hits = 0;
            for (std::size_t i = 0; i < ref.size(); ++i) hits += ref[i].compare(pred[i]) == 0 ? 1 : 0;
            EXPECT_DOUBLE_EQ(token_accuracy(ref, pred), static_cast<double>(hits) / ref.size());
        }
    }
    // Seen text completes better than unseen text.
    EXPECT_GT(token_accuracy(lexical_tokens(train[0].text), model->predict(train[0].text)),
              token_accuracy(lexical_tokens(test[0].text), model->predict(test[0].text)));
}

// ---- dataset ------------------------------------------------------------------------

std::string words(std::size_t n, const char* stem = "w") {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += std::string(i ? " " : "") + stem + std::to_string(i);
    return s;
}

TEST(Dataset, CorpusSplitsForRuleOne) {
    auto train = java::load_corpus(SECT_TEST_DATA "/corpus/train");
    auto test = java::load_corpus(SECT_TEST_DATA "/corpus/test");
    DatasetParams p;
    p.seed = 3;
    auto ds = build_dataset(train, test, 1, p);
    EXPECT_EQ(ds.rule_id, 1);
    EXPECT_FALSE(ds.members.empty());
    EXPECT_EQ(ds.members.size(), ds.nonmembers.size());
    std::map<std::string, const java::SourceUnit*> by_id;
    for (const auto& u : train) by_id[u.id] = &u;
    for (const auto& m : ds.members) {
        const auto& src = *by_id.at(m.id);
        EXPECT_GT(src.word_count, 100u);
        EXPECT_LE(m.word_count, 200u);
        EXPECT_EQ(m.text, java::truncate_words(src.text, 200));
        EXPECT_TRUE(transform::applicable(transform::rule(1), java::parse(src.text)));
    }
    auto again = build_dataset(train, test, 1, p);
    ASSERT_EQ(again.members.size(), ds.members.size());
    for (std::size_t i = 0; i < ds.members.size(); ++i) EXPECT_EQ(again.members[i].id, ds.members[i].id);

    p.max_per_side = 10;
    auto a = build_dataset(train, test, 1, p);
    p.seed = 4;
    auto b = build_dataset(train, test, 1, p);
    EXPECT_EQ(a.members.size(), 10u);
    EXPECT_EQ(b.members.size(), 10u);
    EXPECT_EQ(b.nonmembers.size(), 10u);
    std::set<std::string> ia, ib;
    for (const auto& u : a.members) ia.insert(u.id);
    for (const auto& u : b.members) ib.insert(u.id);
    EXPECT_NE(ia, ib);
}

TEST(Dataset, LengthFilterAndTruncation) {
    // Every statement-bearing unit is Rule-13 applicable (it has an int literal).
    auto unit = [](std::string id, std::size_t n) {
        return java::make_unit(std::move(id), "int v = 1; // " + words(n - 5));
    };
    std::vector<java::SourceUnit> train = {unit("short", 90), unit("exact", 100), unit("long", 250)};
    std::vector<java::SourceUnit> test = {unit("t1", 150), unit("t2", 300), unit("t3", 20)};
    auto ds = build_dataset(train, test, 13, DatasetParams{});
    ASSERT_EQ(ds.members.size(), 1u);
    EXPECT_EQ(ds.members[0].id, "long");
    EXPECT_EQ(ds.members[0].word_count, 200u);
    EXPECT_EQ(ds.members[0].text, java::truncate_words(train[2].text, 200));
    ASSERT_EQ(ds.nonmembers.size(), 1u);
    EXPECT_NE(ds.nonmembers[0].id, "t3");
}

TEST(Dataset, NoApplicableMembersIsAnError) {
    std::vector<java::SourceUnit> train = {java::make_unit("a", "class A { } // " + words(150))};
    std::vector<java::SourceUnit> test = {java::make_unit("b", "class B { } // " + words(150))};
    try {
        build_dataset(train, test, 7, DatasetParams{});
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_STREQ(e.what(), "no applicable members");
    }
    EXPECT_THROW(build_dataset(train, test, 24, DatasetParams{}), InvalidInput);
}

TEST(Sampling, PortableAndWithoutReplacement) {
    std::mt19937_64 rng(1);
    auto s = sample_indices(100, 30, rng);
    EXPECT_EQ(s.size(), 30u);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_EQ(std::set<std::size_t>(s.begin(), s.end()).size(), 30u);
    std::mt19937_64 r2(1);
    EXPECT_EQ(sample_indices(100, 30, r2), s);
    std::mt19937_64 r3(9);
    std::vector<int> hist(5);
    for (int i = 0; i < 5000; ++i) ++hist[draw_below(5, r3)];
    for (int h : hist) EXPECT_NEAR(h, 1000, 150);
    EXPECT_THROW(sample_indices(3, 4, rng), InvalidInput);
}

}  // namespace
}  // namespace sect::mi

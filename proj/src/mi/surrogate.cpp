#include "sect/mi/surrogate.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <unordered_map>

#include "sect/error.hpp"
#include "sect/java/lexer.hpp"

namespace sect::mi {

namespace {

using Id = std::uint32_t;

constexpr Id kUnk = 0;
constexpr Id kBos = 1;  // context padding only
constexpr Id kFirstWord = 2;

struct Follow {
    std::uint64_t total = 0;
    std::unordered_map<Id, std::uint64_t> next;
};

}  // namespace

struct NgramModel::Tables {
    std::unordered_map<std::string, Id> vocab;
    std::vector<std::string> words;  // by id - kFirstWord
    // Context key: the order-1 preceding ids, packed four bytes each.
    std::unordered_map<std::string, Follow> follow;

    Id lookup(const std::string& w) const {
        auto it = vocab.find(w);
        return it == vocab.end() ? kUnk : it->second;
    }
};

std::vector<std::string> lexical_tokens(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& t : java::lex(text)) {
        if (t.kind == java::TokenKind::Eof) break;
        out.emplace_back(text.substr(t.begin, t.end - t.begin));
    }
    return out;
}

namespace {

// Walks `ids` and hands each position's context key to `fn`.
template <typename Fn>
void for_each_context(const std::vector<Id>& ids, int order, Fn&& fn) {
    std::string key(static_cast<std::size_t>(order - 1) * sizeof(Id), '\0');
    auto put = [&](std::size_t slot, Id id) { std::memcpy(key.data() + slot * sizeof(Id), &id, sizeof(Id)); };
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (int j = 1; j < order; ++j) {
            auto back = static_cast<std::size_t>(j);
            put(static_cast<std::size_t>(order - 1 - j), i >= back ? ids[i - back] : kBos);
        }
        fn(i, key);
    }
}

}  // namespace

NgramModel::NgramModel(int order, double alpha) : order_(order), alpha_(alpha), tables_(std::make_unique<Tables>()) {}
NgramModel::~NgramModel() = default;

std::shared_ptr<const NgramModel> NgramModel::train(std::span<const java::SourceUnit> corpus, int order, double alpha) {
    if (corpus.empty()) throw InvalidInput("surrogate needs a non-empty corpus");
    if (order < 1) throw InvalidInput("surrogate order must be >= 1");
    if (!(alpha > 0) || !std::isfinite(alpha)) throw InvalidInput("surrogate alpha must be > 0");
    std::shared_ptr<NgramModel> m(new NgramModel(order, alpha));
    auto& t = *m->tables_;
    for (const auto& unit : corpus) {
        auto words = lexical_tokens(unit.text);
        std::vector<Id> ids;
        ids.reserve(words.size());
        for (auto& w : words) {
            auto next = static_cast<Id>(t.vocab.size() + kFirstWord);
            auto [it, fresh] = t.vocab.try_emplace(w, next);
            if (fresh) t.words.push_back(std::move(w));
            ids.push_back(it->second);
        }
        for_each_context(ids, order, [&](std::size_t i, const std::string& key) {
            auto& f = t.follow[key];
            ++f.total;
            ++f.next[ids[i]];
        });
        m->training_tokens_ += ids.size();
    }
    if (m->training_tokens_ == 0) throw InvalidInput("surrogate corpus has no tokens");
    return m;
}

std::size_t NgramModel::vocabulary_size() const { return tables_->vocab.size() + 1; }

std::string NgramModel::name() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "ngram(order=%d,alpha=%g)", order_, alpha_);
    return buf;
}

LikelihoodProfile NgramModel::profile(std::string sample_id, std::string_view text) const {
    LikelihoodProfile p;
    p.sample_id = std::move(sample_id);
    p.tokens = lexical_tokens(text);
    if (p.tokens.empty()) throw InvalidInput("sample '" + p.sample_id + "' has no tokens");
    std::vector<Id> ids;
    ids.reserve(p.tokens.size());
    for (const auto& w : p.tokens) ids.push_back(tables_->lookup(w));
    const double v = static_cast<double>(vocabulary_size());
    p.nll.resize(ids.size());
    for_each_context(ids, order_, [&](std::size_t i, const std::string& key) {
        double c_ctx = 0, c_w = 0;
        if (auto it = tables_->follow.find(key); it != tables_->follow.end()) {
            c_ctx = static_cast<double>(it->second.total);
            if (auto w = it->second.next.find(ids[i]); w != it->second.next.end()) c_w = static_cast<double>(w->second);
        }
        p.nll[i] = std::log(c_ctx + alpha_ * v) - std::log(c_w + alpha_);
    });
    return p;
}

std::vector<std::string> NgramModel::predict(std::string_view text) const {
    auto words = lexical_tokens(text);
    std::vector<Id> ids;
    ids.reserve(words.size());
    for (const auto& w : words) ids.push_back(tables_->lookup(w));
    std::vector<std::string> out(ids.size(), std::string(kUnknownToken));
    for_each_context(ids, order_, [&](std::size_t i, const std::string& key) {
        auto it = tables_->follow.find(key);
        if (it == tables_->follow.end()) return;
        const std::string* best = nullptr;
        std::uint64_t best_count = 0;
        for (const auto& [id, count] : it->second.next) {
            const auto& w = tables_->words[id - kFirstWord];
            if (count > best_count || (count == best_count && w < *best)) {
                best = &w;
                best_count = count;
            }
        }
        out[i] = *best;
    });
    return out;
}

std::shared_ptr<const LikelihoodProvider> surrogate_train(std::span<const java::SourceUnit> corpus, int order,
                                                          double alpha) {
    return NgramModel::train(corpus, order, alpha);
}

}  // namespace sect::mi

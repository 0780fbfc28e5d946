#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sect/java/features.hpp"
#include "sect/mi/scoring.hpp"

namespace sect::mi {

/// Texts of the Java lexer tokens of `text`, excluding Eof.
std::vector<std::string> lexical_tokens(std::string_view text);

inline constexpr int kDefaultOrder = 3;
inline constexpr std::string_view kUnknownToken = "<unk>";
inline constexpr double kDefaultAlpha = 0.1;

/// Order-n token model with additive smoothing over the training vocabulary
/// plus one unknown-token symbol:
///   P(w | ctx) = (c(ctx, w) + alpha) / (c(ctx) + alpha * |V|)
/// Contexts at the start of a text are padded with a boundary symbol that
/// is never predicted. Immutable after training.
class NgramModel final : public LikelihoodProvider {
public:
    /// Throws InvalidInput for an empty corpus, order < 1 or alpha <= 0.
    static std::shared_ptr<const NgramModel> train(std::span<const java::SourceUnit> corpus, int order = kDefaultOrder,
                                                   double alpha = kDefaultAlpha);

    std::string name() const override;

    /// Throws InvalidInput if `text` has no tokens.
    LikelihoodProfile profile(std::string sample_id, std::string_view text) const override;

    /// Teacher-forced greedy completion: for each token of `text`, the most
    /// frequent training follower of its true context (ties to the smaller
    /// string), or kUnknownToken for an unseen context.
    std::vector<std::string> predict(std::string_view text) const;

    int order() const { return order_; }
    double alpha() const { return alpha_; }
    std::size_t vocabulary_size() const;  // includes the unknown symbol
    std::uint64_t training_tokens() const { return training_tokens_; }

    ~NgramModel() override;

private:
    NgramModel(int order, double alpha);
    struct Tables;
    int order_;
    double alpha_;
    std::uint64_t training_tokens_ = 0;
    std::unique_ptr<Tables> tables_;
};

/// Same as NgramModel::train.
std::shared_ptr<const LikelihoodProvider> surrogate_train(std::span<const java::SourceUnit> corpus,
                                                          int order = kDefaultOrder, double alpha = kDefaultAlpha);

}  // namespace sect::mi

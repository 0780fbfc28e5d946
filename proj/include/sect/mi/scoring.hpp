#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sect::mi {

/// Per-token negative log-likelihoods (nats) of one sample.
struct LikelihoodProfile {
    std::string sample_id;
    std::vector<std::string> tokens;
    std::vector<double> nll;
};

/// Throws InvalidInput unless tokens and nll have the same nonzero length
/// and every nll is finite and non-negative.
void validate(const LikelihoodProfile& profile);

enum class Method { Loss, MinK, Zlib };

std::string_view method_name(Method method);  // "LOSS", "MIN_K", "ZLIB"
std::optional<Method> parse_method(std::string_view name);

/// Lower values are more member-like for every method.
struct MembershipScore {
    std::string sample_id;
    Method method;
    double value;
};

inline constexpr double kDefaultK = 0.2;
inline constexpr int kZlibLevel = 6;

MembershipScore score_loss(const LikelihoodProfile& profile);

/// Mean nll of the max(1, floor(k*n)) least likely tokens, ties to the
/// earlier token. Throws InvalidInput for k outside (0, 1].
MembershipScore score_min_k(const LikelihoodProfile& profile, double k = kDefaultK);

/// LOSS divided by the zlib-compressed length of `raw_text`.
MembershipScore score_zlib(const LikelihoodProfile& profile, std::string_view raw_text);

/// Byte length of the complete RFC 1950 stream at level 6.
std::size_t zlib_compressed_size(std::string_view bytes);

/// Source of likelihood profiles. Implementations must allow concurrent
/// calls to profile().
class LikelihoodProvider {
public:
    virtual ~LikelihoodProvider() = default;
    virtual std::string name() const = 0;
    virtual LikelihoodProfile profile(std::string sample_id, std::string_view text) const = 0;
};

}  // namespace sect::mi

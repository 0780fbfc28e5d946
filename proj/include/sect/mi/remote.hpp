#pragma once

#include <atomic>
#include <chrono>
#include <string>

#include "sect/error.hpp"
#include "sect/mi/scoring.hpp"

namespace sect::mi {

/// Transport failures, non-200 replies and malformed bodies from a remote
/// likelihood server.
class ProviderError : public Error {
public:
    using Error::Error;
};

/// Client for a likelihood server: POST {base}/v1/nll with {"text": ...},
/// answered by {"tokens": [...], "nll": [...], "model_id": "..."}.
/// Each call opens its own connection, so profile() may run concurrently.
class RemoteProvider final : public LikelihoodProvider {
public:
    /// `endpoint` is "http://host:port" with an optional base path. Throws
    /// InvalidInput if it is not an http URL.
    explicit RemoteProvider(std::string endpoint, std::chrono::seconds timeout = std::chrono::seconds(120));

    std::string name() const override;
    LikelihoodProfile profile(std::string sample_id, std::string_view text) const override;

    /// model_id reported by GET {base}/healthz.
    std::string health() const;

    /// Replies flagged "truncated": true so far; their nll covers a prefix
    /// of the text only.
    std::size_t truncated_replies() const { return truncated_.load(); }

private:
    std::string origin_;  // scheme://host:port
    std::string base_;    // path prefix without trailing slash
    std::chrono::seconds timeout_;
    mutable std::atomic<std::size_t> truncated_{0};
};

}  // namespace sect::mi

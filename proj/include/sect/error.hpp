#pragma once

#include <stdexcept>
#include <string>

namespace sect {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data was violated.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A rewrite produced text that no longer parses cleanly.
class InternalRewriteError : public Error {
public:
    InternalRewriteError(int rule_id, std::string unit_id, std::string detail)
        : Error("rule " + std::to_string(rule_id) + " on '" + unit_id + "': " + detail),
          rule_id_(rule_id),
          unit_id_(std::move(unit_id)),
          detail_(std::move(detail)) {}

    int rule_id() const noexcept { return rule_id_; }
    const std::string& unit_id() const noexcept { return unit_id_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    int rule_id_;
    std::string unit_id_;
    std::string detail_;
};

}  // namespace sect

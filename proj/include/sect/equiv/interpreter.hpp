#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sect/java/syntax_tree.hpp"

namespace sect::equiv {

// Order matches the alternatives of Value.
enum class JType : std::uint8_t { Int, Long, Boolean, String, IntArray };

std::string_view type_name(JType type);
std::optional<JType> parse_type(std::string_view text);

using Value = std::variant<std::int32_t, std::int64_t, bool, std::string, std::vector<std::int32_t>>;

inline JType type_of(const Value& v) { return static_cast<JType>(v.index()); }
std::string to_string(const Value& v);

struct Param {
    std::string name;
    JType type;

    friend bool operator==(const Param&, const Param&) = default;
};

/// A static method body over the supported types.
struct SnippetSpec {
    std::string body;  // statements between the method braces
    std::vector<Param> params;
    JType return_type = JType::Int;
};

/// `class Snippet { static RET f(PARAMS) { BODY } }`
std::string wrap(const SnippetSpec& spec);

/// The method `f` of a wrapped snippet, or every static method of a unit
/// whose parameter and return types fall in the subset.
struct NamedSnippet {
    std::string name;
    SnippetSpec spec;
};
std::vector<NamedSnippet> static_methods(const java::SyntaxTree& tree);

enum class Trap : std::uint8_t { DivByZero, IndexOutOfBounds, StepLimit, Unsupported };
std::string_view trap_name(Trap trap);

struct ExecResult {
    enum class Status : std::uint8_t { Value, Trap };
    Status status = Status::Value;
    std::optional<Value> value;
    std::optional<Trap> trap;
    // Final contents of the int[] arguments, which the caller can observe.
    std::vector<std::vector<std::int32_t>> arrays;

    static ExecResult of(Value v, std::vector<std::vector<std::int32_t>> arrays = {});
    static ExecResult trapped(Trap t);
    bool is_trap(Trap t) const { return status == Status::Trap && trap == t; }

    friend bool operator==(const ExecResult&, const ExecResult&) = default;
};

std::string to_string(const ExecResult& r);

inline constexpr std::int64_t kDefaultStepLimit = 1'000'000;

/// A snippet parsed once for repeated evaluation. Constructs outside the
/// subset (including unparsable bodies) surface as Trap(Unsupported) when
/// evaluated, never as an exception.
class Program {
public:
    explicit Program(const SnippetSpec& spec);
    ~Program();
    Program(Program&&) noexcept;
    Program& operator=(Program&&) noexcept;

    const SnippetSpec& spec() const { return spec_; }

    /// Throws InvalidInput if `args` do not match the parameter types or
    /// step_limit <= 0.
    ExecResult run(const std::vector<Value>& args, std::int64_t step_limit = kDefaultStepLimit) const;

private:
    struct Compiled;
    SnippetSpec spec_;
    std::unique_ptr<Compiled> code_;  // null when the snippet does not parse cleanly
};

ExecResult evaluate(const SnippetSpec& spec, const std::vector<Value>& args,
                    std::int64_t step_limit = kDefaultStepLimit);

}  // namespace sect::equiv

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace sect::java {

enum class TokenKind : std::uint8_t {
    Identifier,
    Keyword,
    IntLiteral,
    LongLiteral,
    FloatLiteral,
    CharLiteral,
    StringLiteral,
    BooleanLiteral,
    NullLiteral,
    Operator,  // operators and separators
    Error,     // unterminated literal/comment or stray byte
    Eof,
};

/// A lexical token. Offsets index the owning source text; the leading
/// trivia (whitespace and comments) occupies [trivia_begin, begin).
struct Token {
    TokenKind kind;
    std::uint32_t trivia_begin;
    std::uint32_t begin;
    std::uint32_t end;
};

bool is_java_keyword(std::string_view word);

bool is_literal(TokenKind kind);

/// Splits `source` into tokens. The final token is always Eof and carries
/// the trailing trivia. Never fails; malformed input yields Error tokens.
std::vector<Token> lex(std::string_view source);

/// True iff `text` is well-formed UTF-8.
bool is_valid_utf8(std::string_view text);

}  // namespace sect::java

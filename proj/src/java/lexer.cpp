#include "sect/java/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace sect::java {
namespace {

constexpr std::array<std::string_view, 50> kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",     "case",
    "catch",    "char",       "class",     "const",     "continue", "default",
    "do",       "double",     "else",      "enum",      "extends",  "final",
    "finally",  "float",      "for",       "goto",      "if",       "implements",
    "import",   "instanceof", "int",       "interface", "long",     "native",
    "new",      "package",    "private",   "protected", "public",   "return",
    "short",    "static",     "strictfp",  "super",     "switch",   "synchronized",
    "this",     "throw",      "throws",    "transient", "try",      "void",
    "volatile", "while",
};

// Longest first so a greedy scan picks the maximal operator.
constexpr std::array<std::string_view, 52> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||",
    "==",   "!=",  "<=",  ">=",  "+=",  "-=", "*=", "/=", "&=", "|=", "^=",
    "%=",   "<<",  ">>",  "(",   ")",   "{",  "}",  "[",  "]",  ";",  ",",
    ".",    "@",   "=",   ">",   "<",   "!",  "~",  "?",  ":",  "+",  "-",
    "*",    "/",   "&",   "|",   "^",   "%",  "\\", "#",
};

bool ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        auto trivia_begin = static_cast<std::uint32_t>(pos_);
        if (skip_trivia()) {
            // Unterminated block comment swallows the rest of the input.
            auto begin = static_cast<std::uint32_t>(pos_);
            pos_ = src_.size();
            return {TokenKind::Error, trivia_begin, begin, static_cast<std::uint32_t>(pos_)};
        }
        auto begin = static_cast<std::uint32_t>(pos_);
        if (pos_ >= src_.size()) return {TokenKind::Eof, trivia_begin, begin, begin};
        token_start_ = pos_;
        TokenKind kind = scan();
        return {kind, trivia_begin, begin, static_cast<std::uint32_t>(pos_)};
    }

private:
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    // Returns true on an unterminated block comment.
    bool skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
                ++pos_;
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '/' && peek(1) == '*') {
                auto close = src_.find("*/", pos_ + 2);
                if (close == std::string_view::npos) return true;
                pos_ = close + 2;
            } else {
                break;
            }
        }
        return false;
    }

    TokenKind scan() {
        auto c = static_cast<unsigned char>(src_[pos_]);
        if (ident_start(c)) {
            while (pos_ < src_.size() && ident_part(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return classify_word(src_.substr(start(), pos_ - start()));
        }
        if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            return scan_number();
        }
        if (c == '"') return scan_quoted('"', TokenKind::StringLiteral);
        if (c == '\'') return scan_quoted('\'', TokenKind::CharLiteral);
        for (auto op : kOperators) {
            if (src_.substr(pos_, op.size()) == op) {
                pos_ += op.size();
                return (op == "\\" || op == "#") ? TokenKind::Error : TokenKind::Operator;
            }
        }
        ++pos_;
        return TokenKind::Error;
    }

    std::size_t start() const { return token_start_; }

    TokenKind classify_word(std::string_view w) {
        if (w == "true" || w == "false") return TokenKind::BooleanLiteral;
        if (w == "null") return TokenKind::NullLiteral;
        if (is_java_keyword(w)) return TokenKind::Keyword;
        return TokenKind::Identifier;
    }

    TokenKind scan_number() {
        bool is_float = false;
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            pos_ += 2;
            while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            if (peek() == '.' || peek() == 'p' || peek() == 'P') {
                // Hex floating point.
                is_float = true;
                if (peek() == '.') ++pos_;
                while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
                if (peek() == 'p' || peek() == 'P') {
                    ++pos_;
                    if (peek() == '+' || peek() == '-') ++pos_;
                    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                }
            }
        } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
            pos_ += 2;
            while (peek() == '0' || peek() == '1' || peek() == '_') ++pos_;
        } else {
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                is_float = true;
                ++pos_;
                while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            } else if (peek() == '.' && !ident_start(static_cast<unsigned char>(peek(1))) &&
                       peek(1) != '.') {
                // "1." is a double literal; "1.foo" is not.
                is_float = true;
                ++pos_;
            }
            if (peek() == 'e' || peek() == 'E') {
                is_float = true;
                ++pos_;
                if (peek() == '+' || peek() == '-') ++pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            }
        }
        char suffix = peek();
        if (suffix == 'l' || suffix == 'L') {
            ++pos_;
            return is_float ? TokenKind::Error : TokenKind::LongLiteral;
        }
        if (suffix == 'f' || suffix == 'F' || suffix == 'd' || suffix == 'D') {
            ++pos_;
            return TokenKind::FloatLiteral;
        }
        return is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral;
    }

    TokenKind scan_quoted(char quote, TokenKind kind) {
        ++pos_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\\' && pos_ + 1 < src_.size()) {
                pos_ += 2;
                continue;
            }
            if (c == '\n') return TokenKind::Error;
            ++pos_;
            if (c == quote) return kind;
        }
        return TokenKind::Error;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t token_start_ = 0;
};

}  // namespace

bool is_java_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_literal(TokenKind kind) {
    switch (kind) {
        case TokenKind::IntLiteral:
        case TokenKind::LongLiteral:
        case TokenKind::FloatLiteral:
        case TokenKind::CharLiteral:
        case TokenKind::StringLiteral:
        case TokenKind::BooleanLiteral:
        case TokenKind::NullLiteral:
            return true;
        default:
            return false;
    }
}

std::vector<Token> lex(std::string_view source) {
    std::vector<Token> out;
    Lexer lexer(source);
    do {
        out.push_back(lexer.next());
    } while (out.back().kind != TokenKind::Eof);
    return out;
}

bool is_valid_utf8(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        auto c = static_cast<unsigned char>(text[i]);
        int extra = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + extra >= text.size()) return false;
        for (int k = 1; k <= extra; ++k) {
            auto cc = static_cast<unsigned char>(text[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        // Overlong encodings, surrogates and out-of-range code points.
        if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
            (extra == 3 && (cp < 0x10000 || cp > 0x10FFFF)) || (cp >= 0xD800 && cp <= 0xDFFF)) {
            return false;
        }
        i += extra + 1;
    }
    return true;
}

}  // namespace sect::java

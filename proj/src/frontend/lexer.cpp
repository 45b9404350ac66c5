#include "qhdl/frontend/lexer.hpp"

#include <algorithm>
#include <array>

namespace qhdl::frontend {

namespace {

constexpr std::array<std::string_view, 19> kReserved = {
    "all",   "architecture", "begin", "bit",  "component", "end",     "entity",
    "in",    "is",           "library", "map", "of",        "out",     "port",
    "process", "qbit",       "signal", "use", "inout",
};

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

class Lexer {
public:
    Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
                advance();
                continue;
            }
            if (c == '-' && peek(1) == '-') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            SourceSpan span{file_, line_, column_, 0};
            std::size_t start = pos_;
            if (is_letter(c)) {
                std::string text;
                while (pos_ < src_.size() && (is_letter(src_[pos_]) || is_digit(src_[pos_]) || src_[pos_] == '_')) {
                    text += lower(src_[pos_]);
                    advance();
                }
                span.length = static_cast<std::uint32_t>(pos_ - start);
                TokenKind kind = is_reserved_word(text) ? TokenKind::keyword : TokenKind::identifier;
                out.push_back({kind, std::move(text), span});
                continue;
            }
            if (is_digit(c)) {
                lex_number();
                span.length = static_cast<std::uint32_t>(pos_ - start);
                out.push_back({TokenKind::literal, std::string(src_.substr(start, pos_ - start)), span});
                continue;
            }
            if (c == '"') {
                advance();
                for (;;) {
                    if (pos_ >= src_.size() || src_[pos_] == '\n') {
                        throw LexError("unterminated string literal", span);
                    }
                    if (src_[pos_] == '"') {
                        advance();
                        if (peek(0) == '"') {
                            advance();
                            continue;
                        }
                        break;
                    }
                    check_graphic(src_[pos_]);
                    advance();
                }
                span.length = static_cast<std::uint32_t>(pos_ - start);
                out.push_back({TokenKind::literal, std::string(src_.substr(start, pos_ - start)), span});
                continue;
            }
            if (c == '\'') {
                // A tick after a name or ')' is an attribute mark, otherwise
                // it opens a character literal.
                bool attribute = !out.empty() && (out.back().kind == TokenKind::identifier ||
                                                  out.back().is_symbol(")"));
                if (!attribute && peek(2) == '\'' && peek(1) != '\n') {
                    check_graphic(peek(1));
                    advance();
                    advance();
                    advance();
                    span.length = 3;
                    out.push_back({TokenKind::literal, std::string(src_.substr(start, 3)), span});
                    continue;
                }
                advance();
                span.length = 1;
                out.push_back({TokenKind::symbol, "'", span});
                continue;
            }
            static constexpr std::array<std::string_view, 7> kCompound = {"=>", "<=", ">=", "/=", ":=", "**", "<>"};
            auto compound = std::find_if(kCompound.begin(), kCompound.end(), [&](std::string_view s) {
                return src_.substr(pos_, 2) == s;
            });
            if (compound != kCompound.end()) {
                advance();
                advance();
                span.length = 2;
                out.push_back({TokenKind::symbol, std::string(*compound), span});
                continue;
            }
            static constexpr std::string_view kSingle = "();:,.&+-*/=<>|";
            if (kSingle.find(c) != std::string_view::npos) {
                advance();
                span.length = 1;
                out.push_back({TokenKind::symbol, std::string(1, c), span});
                continue;
            }
            span.length = 1;
            throw LexError("illegal character " + describe(c), span);
        }
        return out;
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void lex_number() {
        auto digits = [&] {
            while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_')) advance();
        };
        digits();
        if (peek(0) == '.' && is_digit(peek(1))) {
            advance();
            digits();
        }
        if ((peek(0) == 'e' || peek(0) == 'E') &&
            (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
            advance();
            if (peek(0) == '+' || peek(0) == '-') advance();
            digits();
        }
    }

    void check_graphic(char c) const {
        auto uc = static_cast<unsigned char>(c);
        if (uc < 0x20 || uc >= 0x7f) {
            throw LexError("illegal character " + describe(c), SourceSpan{file_, line_, column_, 1});
        }
    }

    static std::string describe(char c) {
        auto uc = static_cast<unsigned char>(c);
        if (uc >= 0x21 && uc < 0x7f) return std::string("'") + c + "'";
        static constexpr char kHex[] = "0123456789abcdef";
        return std::string("0x") + kHex[uc >> 4] + kHex[uc & 0xf];
    }

    std::string_view src_;
    std::string file_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    std::uint32_t column_ = 1;
};

}  // namespace

bool is_reserved_word(std::string_view word) {
    return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
    return Lexer(source, file).run();
}

}  // namespace qhdl::frontend

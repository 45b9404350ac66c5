#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qhdl/source.hpp"

namespace qhdl::frontend {

enum class TokenKind {
    identifier,
    keyword,
    symbol,
    // Numeric, character and string literals. They only occur inside
    // non-quantum statements, which the parser keeps as opaque text.
    literal,
};

struct Token {
    TokenKind kind;
    std::string text;
    SourceSpan span;

    bool is_keyword(std::string_view kw) const { return kind == TokenKind::keyword && text == kw; }
    bool is_symbol(std::string_view sym) const { return kind == TokenKind::symbol && text == sym; }
};

class LexError : public Error {
public:
    using Error::Error;
};

/// Reserved words of the QHDL subset. `process` and `component` are
/// reserved so that the non-quantum constructs rule iii forbids can be
/// recognised and reported instead of failing as syntax errors.
bool is_reserved_word(std::string_view word);

/// Splits QHDL source text into tokens. Comments and whitespace are dropped,
/// identifiers and keywords are lowercased. Throws LexError on characters
/// outside the accepted alphabet.
std::vector<Token> tokenize(std::string_view source, const std::string& file = "<input>");

}  // namespace qhdl::frontend

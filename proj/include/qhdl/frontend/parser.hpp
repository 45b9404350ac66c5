#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qhdl/frontend/ast.hpp"
#include "qhdl/frontend/lexer.hpp"

namespace qhdl::frontend {

/// First syntax error of a file. Parsing stops there; there is no recovery.
class SyntaxError : public Error {
public:
    SyntaxError(SourceSpan span, std::string expected, std::string found);

    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::string expected_;
    std::string found_;
};

DesignFile parse(const std::vector<Token>& tokens, const std::string& file = "<input>");

/// tokenize + parse.
DesignFile parse_source(std::string_view source, const std::string& file = "<input>");

}  // namespace qhdl::frontend

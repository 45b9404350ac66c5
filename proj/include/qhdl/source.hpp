#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhdl {

/// Location of a construct in a source file. Lines and columns are 1-based,
/// columns count bytes.
struct SourceSpan {
    std::string file;
    std::uint32_t line = 1;
    std::uint32_t column = 1;
    std::uint32_t length = 0;
};

enum class Severity { error, warning, note };

/// A reportable message. `rule` is the QHDL semantic rule (1..3) the
/// message cites, or 0 when it is not a rule violation.
struct Diagnostic {
    Severity severity = Severity::error;
    SourceSpan span;
    std::string message;
    int rule = 0;
};

/// Renders `file:line:col: error: message`. With `color`, the severity tag
/// is wrapped in ANSI escapes.
std::string format_diagnostic(const Diagnostic& diag, bool color = false);

/// Base of every error the toolchain throws. Carries an optional span so
/// drivers can report uniformly.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message, std::optional<SourceSpan> span = std::nullopt)
        : std::runtime_error(message), span_(std::move(span)) {}

    const std::optional<SourceSpan>& span() const noexcept { return span_; }

    Diagnostic to_diagnostic() const;

private:
    std::optional<SourceSpan> span_;
};

}  // namespace qhdl

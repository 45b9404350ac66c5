#pragma once

#include <string_view>

#include "qhdl/sim/engine.hpp"

namespace qhdl::harness {

class StimulusSyntaxError : public Error {
public:
    StimulusSyntaxError(std::size_t line, const std::string& message, const std::string& file = "<stimulus>")
        : Error(message, SourceSpan{file, static_cast<std::uint32_t>(line), 1, 0}), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parses the line-oriented stimulus format:
///
///     # comment
///     default a_in 0
///     at 5 a_in 1
///
/// Input names are case-insensitive and checked against the design only
/// when a run starts.
sim::Stimulus parse_stimulus(std::string_view text, const std::string& file = "<stimulus>");

}  // namespace qhdl::harness

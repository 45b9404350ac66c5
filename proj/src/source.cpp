#include "qhdl/source.hpp"

namespace qhdl {

namespace {

const char* severity_name(Severity s) {
    switch (s) {
        case Severity::error: return "error";
        case Severity::warning: return "warning";
        case Severity::note: return "note";
    }
    return "error";
}

const char* severity_color(Severity s) {
    switch (s) {
        case Severity::error: return "\x1b[1;31m";
        case Severity::warning: return "\x1b[1;35m";
        case Severity::note: return "\x1b[1;36m";
    }
    return "";
}

}  // namespace

std::string format_diagnostic(const Diagnostic& diag, bool color) {
    std::string out;
    if (!diag.span.file.empty()) {
        out += diag.span.file;
        out += ':';
        out += std::to_string(diag.span.line);
        out += ':';
        out += std::to_string(diag.span.column);
        out += ": ";
    }
    if (color) out += severity_color(diag.severity);
    out += severity_name(diag.severity);
    out += ':';
    if (color) out += "\x1b[0m";
    out += ' ';
    out += diag.message;
    return out;
}

Diagnostic Error::to_diagnostic() const {
    Diagnostic d;
    if (span_) d.span = *span_;
    d.message = what();
    return d;
}

}  // namespace qhdl

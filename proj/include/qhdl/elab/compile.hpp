#pragma once

#include <string_view>
#include <vector>

#include "qhdl/elab/flatten.hpp"
#include "qhdl/elab/netlist.hpp"
#include "qhdl/elab/rules.hpp"
#include "qhdl/elab/schedule.hpp"
#include "qhdl/elab/wires.hpp"
#include "qhdl/frontend/ast.hpp"

namespace qhdl::elab {

/// Everything the simulator needs, produced once by the compiler and then
/// only read.
struct CompiledDesign {
    frontend::EntityDecl top;
    Netlist netlist;
    QubitWireAssignment wires;
    Schedule schedule;
};

/// Raised when the semantic rules reject a design.
class RuleViolation : public Error {
public:
    explicit RuleViolation(std::vector<Diagnostic> diags)
        : Error(std::to_string(diags.size()) + " QHDL rule violation(s)"), diags_(std::move(diags)) {}

    const std::vector<Diagnostic>& diagnostics() const noexcept { return diags_; }

private:
    std::vector<Diagnostic> diags_;
};

/// flatten, rule check, wire inference and scheduling.
CompiledDesign compile_design(const frontend::DesignFile& design, std::string_view top,
                              std::size_t qubit_limit = kDefaultQubitLimit);

}  // namespace qhdl::elab

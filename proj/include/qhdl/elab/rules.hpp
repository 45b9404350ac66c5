#pragma once

#include <vector>

#include "qhdl/elab/netlist.hpp"
#include "qhdl/frontend/ast.hpp"

namespace qhdl::elab {

/// Checks the three QHDL semantic rules and returns one diagnostic per
/// violation, each tagged with the rule number:
///
///   1. every qbit signal has exactly one driver and exactly one sink
///      (no-cloning); one diagnostic per offending net. A top-level port
///      counts as the external driver (`in`) or sink (`out`) of its net.
///   2. the top-level entity has no qbit ports; one diagnostic for the
///      entity naming all of them.
///   3. no process, concurrent assignment or component declaration in any
///      architecture of `design`; one diagnostic per statement.
///
/// An empty result means the netlist may be simulated. Callers must treat a
/// non-empty result as fatal.
std::vector<Diagnostic> check_qbit_rules(const Netlist& netlist, const frontend::EntityDecl& top_entity,
                                         const frontend::DesignFile& design);

}  // namespace qhdl::elab

#pragma once

#include <string_view>

#include "qhdl/elab/netlist.hpp"
#include "qhdl/frontend/ast.hpp"

namespace qhdl::elab {

/// Binds every component instance reachable from entity `top` and inlines
/// user entities until only built-in gates remain.
///
/// Component names resolve against qhdl.std first, then against entities of
/// `design`. A formal port of a user entity aliases the actual net of the
/// enclosing level, so a qubit chain crossing hierarchy boundaries stays one
/// net per point-to-point link. Gate labels are hierarchical (`u1.g1`).
///
/// Also rejects bit nets with several drivers and setup/measure clocks that
/// do not all come from one top-level `in bit` port.
Netlist bind_and_flatten(const frontend::DesignFile& design, std::string_view top);

}  // namespace qhdl::elab

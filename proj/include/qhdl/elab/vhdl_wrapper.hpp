#pragma once

#include <cstdint>
#include <string>

#include "qhdl/elab/netlist.hpp"
#include "qhdl/frontend/ast.hpp"

namespace qhdl::elab {

/// 64-bit FNV-1a over a canonical text rendering of the netlist.
std::uint64_t netlist_hash(const Netlist& netlist);

/// VHDL entity with the top-level bit ports of `top` (same names, modes and
/// order) and an architecture whose body only carries a marker comment
/// naming the netlist hash. Output is a pure function of the inputs.
std::string emit_vhdl_wrapper(const Netlist& netlist, const frontend::EntityDecl& top);

}  // namespace qhdl::elab

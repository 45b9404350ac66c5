#pragma once

#include <cstddef>
#include <vector>

#include "qhdl/elab/netlist.hpp"
#include "qhdl/elab/wires.hpp"

namespace qhdl::elab {

struct ScheduledOp {
    std::size_t step_index;
    std::size_t gate;  // index into Netlist::gates
};

struct Schedule {
    std::vector<ScheduledOp> steps;

    std::size_t steps_total() const { return steps.size(); }
};

/// Orders the gates of one clock cycle: setups in declaration order, then
/// unitaries in topological order of the qbit dataflow (ties by declaration
/// order), then measures in declaration order.
///
/// Nets feeding a setup's `d` pin are cross-cycle feedback and impose no
/// order. Throws CombinationalQuantumLoop when unitaries form a cycle and
/// UnschedulableDataflow when some other net would run against the phase
/// order (for example a measure output feeding a unitary).
Schedule schedule(const Netlist& netlist, const QubitWireAssignment& wires);

}  // namespace qhdl::elab

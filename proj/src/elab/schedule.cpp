#include "qhdl/elab/schedule.hpp"

#include <functional>
#include <queue>

namespace qhdl::elab {

Schedule schedule(const Netlist& netlist, const QubitWireAssignment& /*wires*/) {
    const std::size_t gate_count = netlist.gates.size();
    auto kind_of = [&](std::size_t g) { return netlist.gates[g].gate->kind; };

    std::vector<std::vector<std::size_t>> successors(gate_count);
    std::vector<std::size_t> in_degree(gate_count, 0);
    for (NetId n : netlist.qnets()) {
        for (const auto& d : netlist.drivers(n)) {
            if (kind_of(d.gate) != GateKind::unitary) continue;
            for (const auto& s : netlist.sinks(n)) {
                if (kind_of(s.gate) != GateKind::unitary) continue;
                successors[d.gate].push_back(s.gate);
                ++in_degree[s.gate];
            }
        }
    }

    std::vector<std::size_t> order;
    for (std::size_t g = 0; g < gate_count; ++g) {
        if (kind_of(g) == GateKind::setup) order.push_back(g);
    }

    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    std::size_t unitary_count = 0;
    for (std::size_t g = 0; g < gate_count; ++g) {
        if (kind_of(g) != GateKind::unitary) continue;
        ++unitary_count;
        if (in_degree[g] == 0) ready.push(g);
    }
    std::size_t emitted = 0;
    while (!ready.empty()) {
        std::size_t g = ready.top();
        ready.pop();
        order.push_back(g);
        ++emitted;
        for (std::size_t s : successors[g]) {
            if (--in_degree[s] == 0) ready.push(s);
        }
    }
    if (emitted != unitary_count) {
        std::string labels;
        std::optional<SourceSpan> span;
        for (std::size_t g = 0; g < gate_count; ++g) {
            if (kind_of(g) != GateKind::unitary || in_degree[g] == 0) continue;
            if (!span) span = netlist.gates[g].span;
            labels += (labels.empty() ? "" : ", ") + netlist.gates[g].path_label;
        }
        throw ElaborationError(ElaborationError::Kind::combinational_quantum_loop,
                               "combinational quantum loop through " + labels, span);
    }

    for (std::size_t g = 0; g < gate_count; ++g) {
        if (kind_of(g) == GateKind::measure) order.push_back(g);
    }

    Schedule sched;
    std::vector<std::size_t> step_of(gate_count);
    for (std::size_t i = 0; i < order.size(); ++i) {
        sched.steps.push_back(ScheduledOp{i, order[i]});
        step_of[order[i]] = i;
    }

    for (NetId n : netlist.qnets()) {
        for (const auto& s : netlist.sinks(n)) {
            const auto& sink = netlist.gates[s.gate];
            if (sink.gate->kind == GateKind::setup && sink.gate->ports[s.port].name == "d") continue;
            for (const auto& d : netlist.drivers(n)) {
                if (step_of[d.gate] < step_of[s.gate]) continue;
                throw ElaborationError(ElaborationError::Kind::unschedulable_dataflow,
                                       "qbit signal '" + netlist.nets[n].name + "' runs from '" +
                                           netlist.gates[d.gate].path_label + "' back to '" + sink.path_label +
                                           "', against the setup/unitary/measure order of a clock cycle",
                                       netlist.nets[n].span);
            }
        }
    }
    return sched;
}

}  // namespace qhdl::elab

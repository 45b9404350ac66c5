#include "qhdl/elab/compile.hpp"

namespace qhdl::elab {

CompiledDesign compile_design(const frontend::DesignFile& design, std::string_view top, std::size_t qubit_limit) {
    Netlist netlist = bind_and_flatten(design, top);
    const frontend::EntityDecl& top_entity = *design.find_entity(netlist.top);
    if (auto diags = check_qbit_rules(netlist, top_entity, design); !diags.empty()) {
        throw RuleViolation(std::move(diags));
    }
    QubitWireAssignment wires = infer_qubit_wires(netlist, qubit_limit);
    Schedule sched = schedule(netlist, wires);
    return CompiledDesign{top_entity, std::move(netlist), std::move(wires), std::move(sched)};
}

}  // namespace qhdl::elab

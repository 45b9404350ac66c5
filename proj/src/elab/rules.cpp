#include "qhdl/elab/rules.hpp"

namespace qhdl::elab {

namespace {

std::string plural(std::size_t n, const char* word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

}  // namespace

std::vector<Diagnostic> check_qbit_rules(const Netlist& netlist, const frontend::EntityDecl& top_entity,
                                         const frontend::DesignFile& design) {
    std::vector<Diagnostic> diags;

    for (NetId n : netlist.qnets()) {
        const Net& net = netlist.nets[n];
        std::size_t drivers = netlist.drivers(n).size();
        std::size_t sinks = netlist.sinks(n).size();
        if (net.top_port) {
            if (netlist.top_ports[*net.top_port].decl.mode == PortMode::in) {
                ++drivers;
            } else {
                ++sinks;
            }
        }
        if (drivers == 1 && sinks == 1) continue;
        std::vector<std::string> problems;
        if (drivers == 0) problems.push_back("no driver");
        if (drivers > 1) problems.push_back("multiple drivers (" + plural(drivers, "driver") + ")");
        if (sinks == 0) problems.push_back("no sink");
        if (sinks > 1) problems.push_back("multiple sinks (" + plural(sinks, "sink") + ")");
        std::string msg = "rule i: qbit signal '" + net.name + "' must be driven by a single output and connect to a single input: ";
        for (std::size_t i = 0; i < problems.size(); ++i) msg += (i ? ", " : "") + problems[i];
        diags.push_back(Diagnostic{Severity::error, net.span, std::move(msg), 1});
    }

    std::string qbit_ports;
    const frontend::PortDecl* first = nullptr;
    for (const auto& p : top_entity.ports) {
        if (p.type != TypeMark::qbit) continue;
        if (!first) first = &p;
        qbit_ports += (qbit_ports.empty() ? "'" : ", '") + p.name.text + "'";
    }
    if (first) {
        diags.push_back(Diagnostic{Severity::error, first->span,
                                   "rule ii: top-level entity '" + top_entity.name.text +
                                       "' must not have ports of type qbit: " + qbit_ports,
                                   2});
    }

    for (const auto& arch : design.architectures) {
        for (const auto& st : arch.non_quantum) {
            std::string what(frontend::to_string(st.kind));
            if (st.label) what += " '" + st.label->text + "'";
            diags.push_back(Diagnostic{Severity::error, st.span,
                                       "rule iii: " + what + " in architecture '" + arch.name.text + "' of '" +
                                           arch.entity_name.text + "': QHDL entities cannot contain non-quantum logic",
                                       3});
        }
    }
    return diags;
}

}  // namespace qhdl::elab

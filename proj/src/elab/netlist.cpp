#include "qhdl/elab/netlist.hpp"

namespace qhdl::elab {

namespace {

std::vector<NetId> nets_of_type(const Netlist& nl, TypeMark type) {
    std::vector<NetId> out;
    for (NetId i = 0; i < nl.nets.size(); ++i) {
        if (nl.nets[i].type == type) out.push_back(i);
    }
    return out;
}

std::vector<PinRef> pins_on(const Netlist& nl, NetId net, PortMode mode) {
    std::vector<PinRef> out;
    for (std::size_t g = 0; g < nl.gates.size(); ++g) {
        const auto& gate = nl.gates[g];
        for (std::size_t p = 0; p < gate.pins.size(); ++p) {
            if (gate.pins[p] == net && gate.gate->ports[p].mode == mode) out.push_back({g, p});
        }
    }
    return out;
}

}  // namespace

std::vector<NetId> Netlist::qnets() const { return nets_of_type(*this, TypeMark::qbit); }

std::vector<NetId> Netlist::cnets() const { return nets_of_type(*this, TypeMark::bit); }

std::vector<PinRef> Netlist::drivers(NetId net) const { return pins_on(*this, net, PortMode::out); }

std::vector<PinRef> Netlist::sinks(NetId net) const { return pins_on(*this, net, PortMode::in); }

std::optional<std::size_t> Netlist::find_gate(std::string_view path_label) const {
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (gates[i].path_label == path_label) return i;
    }
    return std::nullopt;
}

std::optional<NetId> Netlist::find_net(std::string_view name) const {
    for (NetId i = 0; i < nets.size(); ++i) {
        if (nets[i].name == name) return i;
    }
    return std::nullopt;
}

}  // namespace qhdl::elab

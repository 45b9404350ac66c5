#include "qhdl/elab/vhdl_wrapper.hpp"

#include <cstdio>
#include <sstream>

namespace qhdl::elab {

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

std::uint64_t netlist_hash(const Netlist& netlist) {
    std::ostringstream os;
    os << "top " << netlist.top << '\n';
    for (const auto& net : netlist.nets) os << "net " << net.name << ' ' << frontend::to_string(net.type) << '\n';
    for (const auto& p : netlist.top_ports) {
        os << "port " << p.decl.name.text << ' ' << frontend::to_string(p.decl.mode) << ' '
           << frontend::to_string(p.decl.type) << ' ' << p.net << '\n';
    }
    for (const auto& g : netlist.gates) {
        os << "gate " << g.path_label << ' ' << g.gate->name;
        for (NetId n : g.pins) os << ' ' << n;
        os << '\n';
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string emit_vhdl_wrapper(const Netlist& netlist, const frontend::EntityDecl& top) {
    const std::string hash = hex64(netlist_hash(netlist));
    std::ostringstream os;
    os << "-- Generated by qhdl from entity " << top.name.text << ". Do not edit.\n";
    os << "-- netlist " << hash << ": " << netlist.gates.size() << " gates, " << netlist.qnets().size()
       << " qbit nets\n\n";
    os << "entity " << top.name.text << " is\n";
    std::vector<const frontend::PortDecl*> ports;
    for (const auto& p : top.ports) {
        if (p.type == frontend::TypeMark::bit) ports.push_back(&p);
    }
    if (!ports.empty()) {
        os << "  port (\n";
        for (std::size_t i = 0; i < ports.size(); ++i) {
            os << "    " << ports[i]->name.text << ": " << frontend::to_string(ports[i]->mode) << " bit"
               << (i + 1 < ports.size() ? ";\n" : "\n");
        }
        os << "    );\n";
    }
    os << "end entity " << top.name.text << ";\n\n";
    os << "architecture qsim of " << top.name.text << " is\n";
    os << "begin\n";
    os << "  -- foreign qsim netlist " << hash << '\n';
    os << "end architecture qsim;\n";
    return os.str();
}

}  // namespace qhdl::elab

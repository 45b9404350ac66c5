#include "qhdl/elab/builtins.hpp"

#include <algorithm>

namespace qhdl::elab {

namespace {

constexpr auto in = PortMode::in;
constexpr auto out = PortMode::out;
constexpr auto bit = TypeMark::bit;
constexpr auto qbit = TypeMark::qbit;

std::vector<BuiltinGate> make_catalog() {
    std::vector<BuiltinGate> c;
    c.push_back({"qset", GateKind::setup, UnitaryOp::none,
                 {{"clk", in, bit}, {"d", in, qbit}, {"q", out, qbit}, {"set", in, bit}},
                 {{1, 2}},
                 {1}});
    c.push_back({"qmeasure", GateKind::measure, UnitaryOp::none,
                 {{"clk", in, bit}, {"d", in, qbit}, {"q", out, qbit}, {"result", out, bit}},
                 {{1, 2}},
                 {1}});
    c.push_back({"qnot", GateKind::unitary, UnitaryOp::x, {{"d", in, qbit}, {"q", out, qbit}}, {{0, 1}}, {0}});
    c.push_back(
        {"qhadamard", GateKind::unitary, UnitaryOp::hadamard, {{"d", in, qbit}, {"q", out, qbit}}, {{0, 1}}, {0}});
    c.push_back({"qcnot", GateKind::unitary, UnitaryOp::cnot,
                 {{"c_in", in, qbit}, {"c_out", out, qbit}, {"d", in, qbit}, {"q", out, qbit}},
                 {{0, 1}, {2, 3}},
                 {0, 2}});
    c.push_back({"qtoffoli", GateKind::unitary, UnitaryOp::toffoli,
                 {{"c0_in", in, qbit},
                  {"c1_in", in, qbit},
                  {"c0_out", out, qbit},
                  {"c1_out", out, qbit},
                  {"d", in, qbit},
                  {"q", out, qbit}},
                 {{0, 2}, {1, 3}, {4, 5}},
                 {0, 1, 4}});
    c.push_back({"qfredkin", GateKind::unitary, UnitaryOp::fredkin,
                 {{"c_in", in, qbit},
                  {"c_out", out, qbit},
                  {"a_in", in, qbit},
                  {"b_in", in, qbit},
                  {"a_out", out, qbit},
                  {"b_out", out, qbit}},
                 {{0, 1}, {2, 4}, {3, 5}},
                 {0, 2, 3}});
    return c;
}

const std::vector<BuiltinGate>& catalog() {
    static const std::vector<BuiltinGate> c = make_catalog();
    return c;
}

}  // namespace

std::size_t BuiltinGate::port_index(std::string_view port) const {
    for (std::size_t i = 0; i < ports.size(); ++i) {
        if (ports[i].name == port) return i;
    }
    return std::string_view::npos;
}

std::span<const BuiltinGate> builtin_catalog() { return catalog(); }

const BuiltinGate* find_builtin(std::string_view name) {
    const auto& c = catalog();
    auto it = std::find_if(c.begin(), c.end(), [&](const BuiltinGate& g) { return g.name == name; });
    return it == c.end() ? nullptr : &*it;
}

}  // namespace qhdl::elab

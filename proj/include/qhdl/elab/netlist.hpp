#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhdl/elab/builtins.hpp"
#include "qhdl/frontend/ast.hpp"

namespace qhdl::elab {

using NetId = std::size_t;

struct Net {
    std::string name;  // hierarchical, e.g. "u1.x"
    TypeMark type;
    SourceSpan span;
    std::optional<std::size_t> top_port;  // index into Netlist::top_ports
};

/// A built-in gate in the flattened design. `pins[i]` is the net bound to
/// `gate->ports[i]`.
struct GateInstance {
    std::string path_label;
    const BuiltinGate* gate = nullptr;
    std::vector<NetId> pins;
    SourceSpan span;

    NetId net_of(std::string_view port) const { return pins.at(gate->port_index(port)); }
};

struct TopPort {
    frontend::PortDecl decl;
    NetId net;
};

struct PinRef {
    std::size_t gate;
    std::size_t port;
};

/// Gate-level view of a design: every instance is a built-in and every
/// signal has become a net. Gate order is flattened declaration order.
struct Netlist {
    std::string top;
    std::vector<GateInstance> gates;
    std::vector<Net> nets;
    std::vector<TopPort> top_ports;

    std::vector<NetId> qnets() const;
    std::vector<NetId> cnets() const;

    /// Gate output pins bound to `net`.
    std::vector<PinRef> drivers(NetId net) const;
    /// Gate input pins bound to `net`.
    std::vector<PinRef> sinks(NetId net) const;

    std::optional<std::size_t> find_gate(std::string_view path_label) const;
    std::optional<NetId> find_net(std::string_view name) const;
};

/// Fatal elaboration failure.
class ElaborationError : public Error {
public:
    enum class Kind {
        unknown_component,
        unknown_entity,
        unknown_signal,
        missing_architecture,
        duplicate_architecture,
        duplicate_declaration,
        port_map_mismatch,
        recursive_instantiation,
        clock_domain,
        multiple_drivers,
        qubit_limit_exceeded,
        combinational_quantum_loop,
        unschedulable_dataflow,
    };

    ElaborationError(Kind kind, const std::string& message, std::optional<SourceSpan> span = std::nullopt)
        : Error(message, std::move(span)), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

}  // namespace qhdl::elab

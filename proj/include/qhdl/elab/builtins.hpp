#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhdl/frontend/ast.hpp"

namespace qhdl::elab {

using frontend::PortMode;
using frontend::TypeMark;

enum class GateKind { setup, measure, unitary };

/// Which quantum operation a unitary built-in performs.
enum class UnitaryOp { none, x, hadamard, cnot, toffoli, fredkin };

struct BuiltinPort {
    std::string name;
    PortMode mode;
    TypeMark type;
};

/// A component of package qhdl.std.
///
/// `pass_through` lists (input, output) port index pairs that carry the same
/// physical qubit through the gate. `operands` lists the input ports whose
/// qubits the operation acts on, in the order the kernel expects them
/// (controls before target; for qfredkin the control and then the swapped
/// pair).
struct BuiltinGate {
    std::string name;
    GateKind kind;
    UnitaryOp op;
    std::vector<BuiltinPort> ports;
    std::vector<std::pair<std::size_t, std::size_t>> pass_through;
    std::vector<std::size_t> operands;

    std::size_t arity() const { return pass_through.size(); }
    /// Index of the named port; npos if absent.
    std::size_t port_index(std::string_view port) const;
};

/// The full qhdl.std catalog: qset, qmeasure, qnot, qhadamard, qcnot,
/// qtoffoli, qfredkin.
std::span<const BuiltinGate> builtin_catalog();

/// nullptr when `name` is not a built-in.
const BuiltinGate* find_builtin(std::string_view name);

}  // namespace qhdl::elab

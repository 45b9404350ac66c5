#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhdl/elab/netlist.hpp"

namespace qhdl::elab {

inline constexpr std::size_t kDefaultQubitLimit = 24;

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    std::size_t find(std::size_t x);
    /// Returns false when both were already in one set.
    bool unite(std::size_t a, std::size_t b);
    std::size_t set_count() const { return sets_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t sets_;
};

struct QubitWireAssignment {
    /// Indexed by NetId; empty for bit nets.
    std::vector<std::optional<std::size_t>> wire_of_net;
    std::size_t n = 0;

    std::size_t wire(NetId net) const { return wire_of_net.at(net).value(); }
};

/// Groups qbit nets into physical qubits. Each gate joins the nets on its
/// pass-through pin pairs; every resulting class is one qubit. Indices are
/// handed out in order of first appearance while walking gates in
/// flattened order and their pins in port order; nets touched by no gate
/// come last in net order. Throws QubitLimitExceeded when more than
/// `limit` qubits result.
QubitWireAssignment infer_qubit_wires(const Netlist& netlist, std::size_t limit = kDefaultQubitLimit);

}  // namespace qhdl::elab

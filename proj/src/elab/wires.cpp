#include "qhdl/elab/wires.hpp"

#include <numeric>

namespace qhdl::elab {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
}

QubitWireAssignment infer_qubit_wires(const Netlist& netlist, std::size_t limit) {
    UnionFind uf(netlist.nets.size());
    for (const auto& g : netlist.gates) {
        for (auto [in, out] : g.gate->pass_through) uf.unite(g.pins[in], g.pins[out]);
    }

    QubitWireAssignment wa;
    wa.wire_of_net.resize(netlist.nets.size());
    std::vector<std::optional<std::size_t>> index_of_root(netlist.nets.size());
    auto assign = [&](NetId net) {
        std::size_t root = uf.find(net);
        if (!index_of_root[root]) index_of_root[root] = wa.n++;
        wa.wire_of_net[net] = index_of_root[root];
    };
    for (const auto& g : netlist.gates) {
        for (std::size_t p = 0; p < g.pins.size(); ++p) {
            if (g.gate->ports[p].type == TypeMark::qbit) assign(g.pins[p]);
        }
    }
    for (NetId n : netlist.qnets()) assign(n);

    if (wa.n > limit) {
        throw ElaborationError(ElaborationError::Kind::qubit_limit_exceeded,
                               "design needs " + std::to_string(wa.n) + " qubits, limit is " + std::to_string(limit));
    }
    return wa;
}

}  // namespace qhdl::elab

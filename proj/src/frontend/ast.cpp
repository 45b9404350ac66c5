#include "qhdl/frontend/ast.hpp"

#include <algorithm>

namespace qhdl::frontend {

std::string_view to_string(PortMode mode) { return mode == PortMode::in ? "in" : "out"; }

std::string_view to_string(TypeMark type) { return type == TypeMark::bit ? "bit" : "qbit"; }

std::string_view to_string(NonQuantumStatement::Kind kind) {
    switch (kind) {
        case NonQuantumStatement::Kind::process: return "process statement";
        case NonQuantumStatement::Kind::signal_assignment: return "concurrent signal assignment";
        case NonQuantumStatement::Kind::component_declaration: return "component declaration";
    }
    return "statement";
}

const PortDecl* EntityDecl::find_port(std::string_view port) const {
    auto it = std::find_if(ports.begin(), ports.end(), [&](const PortDecl& p) { return p.name.text == port; });
    return it == ports.end() ? nullptr : &*it;
}

const EntityDecl* DesignFile::find_entity(std::string_view name) const {
    auto it = std::find_if(entities.begin(), entities.end(), [&](const EntityDecl& e) { return e.name.text == name; });
    return it == entities.end() ? nullptr : &*it;
}

DesignFile merge(std::vector<DesignFile> files) {
    DesignFile out;
    for (auto& f : files) {
        std::move(f.context_clauses.begin(), f.context_clauses.end(), std::back_inserter(out.context_clauses));
        std::move(f.entities.begin(), f.entities.end(), std::back_inserter(out.entities));
        std::move(f.architectures.begin(), f.architectures.end(), std::back_inserter(out.architectures));
    }
    return out;
}

namespace {

bool eq(const Identifier& a, const Identifier& b) { return a.text == b.text; }

bool eq(const std::optional<Identifier>& a, const std::optional<Identifier>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || eq(*a, *b);
}

template <typename T, typename F>
bool eq_list(const std::vector<T>& a, const std::vector<T>& b, F&& f) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), f);
}

bool eq_ids(const std::vector<Identifier>& a, const std::vector<Identifier>& b) {
    return eq_list(a, b, [](const Identifier& x, const Identifier& y) { return eq(x, y); });
}

bool eq(const ContextItem& a, const ContextItem& b) {
    if (a.index() != b.index()) return false;
    if (const auto* lib = std::get_if<LibraryClause>(&a)) return eq_ids(lib->names, std::get<LibraryClause>(b).names);
    return eq_ids(std::get<UseClause>(a).path, std::get<UseClause>(b).path);
}

bool eq(const EntityDecl& a, const EntityDecl& b) {
    return eq(a.name, b.name) && eq_list(a.ports, b.ports, [](const PortDecl& x, const PortDecl& y) {
               return eq(x.name, y.name) && x.mode == y.mode && x.type == y.type;
           });
}

bool eq(const ArchitectureBody& a, const ArchitectureBody& b) {
    return eq(a.name, b.name) && eq(a.entity_name, b.entity_name) &&
           eq_list(a.signals, b.signals,
                   [](const SignalDecl& x, const SignalDecl& y) { return eq(x.name, y.name) && x.type == y.type; }) &&
           eq_list(a.instances, b.instances,
                   [](const ComponentInstance& x, const ComponentInstance& y) {
                       return eq(x.label, y.label) && eq(x.component, y.component) &&
                              eq_list(x.port_map, y.port_map, [](const Association& p, const Association& q) {
                                  return eq(p.formal, q.formal) && eq(p.actual, q.actual);
                              });
                   }) &&
           eq_list(a.non_quantum, b.non_quantum, [](const NonQuantumStatement& x, const NonQuantumStatement& y) {
               return x.kind == y.kind && eq(x.label, y.label) && x.text == y.text;
           });
}

}  // namespace

bool structurally_equal(const DesignFile& a, const DesignFile& b) {
    return eq_list(a.context_clauses, b.context_clauses, [](const auto& x, const auto& y) { return eq(x, y); }) &&
           eq_list(a.entities, b.entities, [](const auto& x, const auto& y) { return eq(x, y); }) &&
           eq_list(a.architectures, b.architectures, [](const auto& x, const auto& y) { return eq(x, y); });
}

}  // namespace qhdl::frontend

#include "qhdl/elab/flatten.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qhdl::elab {

using frontend::ArchitectureBody;
using frontend::ComponentInstance;
using frontend::DesignFile;
using frontend::EntityDecl;
using Kind = ElaborationError::Kind;

namespace {

struct ScopeEntry {
    NetId net;
    TypeMark type;
    std::optional<PortMode> port_mode;  // set when the name is a port of the enclosing entity
    SourceSpan span;
};

struct FormalPort {
    std::string name;
    PortMode mode;
    TypeMark type;
};

class Flattener {
public:
    explicit Flattener(const DesignFile& design) : design_(design) {
        std::set<std::string, std::less<>> seen;
        for (const auto& ent : design_.entities) {
            if (!seen.insert(ent.name.text).second) {
                throw ElaborationError(Kind::duplicate_declaration, "entity '" + ent.name.text + "' is declared twice",
                                       ent.name.span);
            }
        }
        for (const auto& arch : design_.architectures) {
            if (!design_.find_entity(arch.entity_name.text)) {
                throw ElaborationError(Kind::unknown_entity,
                                       "architecture '" + arch.name.text + "' names unknown entity '" +
                                           arch.entity_name.text + "'",
                                       arch.entity_name.span);
            }
        }
    }

    Netlist run(std::string_view top) {
        const EntityDecl* ent = design_.find_entity(top);
        if (!ent) {
            throw ElaborationError(Kind::unknown_entity, "top-level entity '" + std::string(top) + "' not found");
        }
        nl_.top = ent->name.text;
        check_unique_ports(*ent);
        std::map<std::string, ScopeEntry, std::less<>> bindings;
        for (std::size_t i = 0; i < ent->ports.size(); ++i) {
            const auto& p = ent->ports[i];
            NetId id = nl_.nets.size();
            nl_.nets.push_back(Net{p.name.text, p.type, p.name.span, i});
            nl_.top_ports.push_back(TopPort{p, id});
            bindings.emplace(p.name.text, ScopeEntry{id, p.type, p.mode, p.name.span});
        }
        std::vector<std::string> stack;
        elaborate(*ent, ent->name.span, "", std::move(bindings), stack);
        check_bit_drivers();
        check_clock();
        return std::move(nl_);
    }

private:
    const ArchitectureBody& architecture_of(const EntityDecl& ent, const SourceSpan& use_site) const {
        const ArchitectureBody* found = nullptr;
        for (const auto& arch : design_.architectures) {
            if (arch.entity_name.text != ent.name.text) continue;
            if (found) {
                throw ElaborationError(Kind::duplicate_architecture,
                                       "entity '" + ent.name.text + "' has more than one architecture",
                                       arch.name.span);
            }
            found = &arch;
        }
        if (!found) {
            throw ElaborationError(Kind::missing_architecture, "entity '" + ent.name.text + "' has no architecture",
                                   use_site);
        }
        return *found;
    }

    static void check_unique_ports(const EntityDecl& ent) {
        std::set<std::string, std::less<>> seen;
        for (const auto& p : ent.ports) {
            if (!seen.insert(p.name.text).second) {
                throw ElaborationError(Kind::duplicate_declaration,
                                       "port '" + p.name.text + "' of entity '" + ent.name.text + "' declared twice",
                                       p.name.span);
            }
        }
    }

    void elaborate(const EntityDecl& ent, const SourceSpan& use_site, const std::string& prefix,
                   std::map<std::string, ScopeEntry, std::less<>> scope, std::vector<std::string>& stack) {
        stack.push_back(ent.name.text);
        const ArchitectureBody& arch = architecture_of(ent, use_site);

        for (const auto& sig : arch.signals) {
            if (scope.count(sig.name.text)) {
                throw ElaborationError(Kind::duplicate_declaration,
                                       "signal '" + sig.name.text + "' conflicts with an earlier declaration",
                                       sig.name.span);
            }
            NetId id = nl_.nets.size();
            nl_.nets.push_back(Net{prefix + sig.name.text, sig.type, sig.name.span, std::nullopt});
            scope.emplace(sig.name.text, ScopeEntry{id, sig.type, std::nullopt, sig.name.span});
        }

        std::set<std::string, std::less<>> labels;
        for (const auto& inst : arch.instances) {
            if (!labels.insert(inst.label.text).second) {
                throw ElaborationError(Kind::duplicate_declaration,
                                       "instance label '" + inst.label.text + "' used twice", inst.label.span);
            }
        }

        for (const auto& inst : arch.instances) {
            if (const BuiltinGate* gate = find_builtin(inst.component.text)) {
                std::vector<FormalPort> formals;
                for (const auto& p : gate->ports) formals.push_back({p.name, p.mode, p.type});
                auto bound = bind_ports(inst, formals, scope);
                GateInstance gi;
                gi.path_label = prefix + inst.label.text;
                gi.gate = gate;
                gi.span = inst.label.span;
                for (const auto& b : bound) gi.pins.push_back(b.net);
                nl_.gates.push_back(std::move(gi));
                continue;
            }
            const EntityDecl* sub = design_.find_entity(inst.component.text);
            if (!sub) {
                throw ElaborationError(Kind::unknown_component,
                                       "instance '" + inst.label.text + "': unknown component '" +
                                           inst.component.text + "'",
                                       inst.component.span);
            }
            if (std::find(stack.begin(), stack.end(), sub->name.text) != stack.end()) {
                std::string cycle;
                auto first = std::find(stack.begin(), stack.end(), sub->name.text);
                for (auto it = first; it != stack.end(); ++it) cycle += *it + " -> ";
                cycle += sub->name.text;
                throw ElaborationError(Kind::recursive_instantiation, "recursive instantiation: " + cycle,
                                       inst.label.span);
            }
            check_unique_ports(*sub);
            std::vector<FormalPort> formals;
            for (const auto& p : sub->ports) formals.push_back({p.name.text, p.mode, p.type});
            auto bound = bind_ports(inst, formals, scope);
            std::map<std::string, ScopeEntry, std::less<>> inner;
            for (std::size_t i = 0; i < sub->ports.size(); ++i) {
                const auto& p = sub->ports[i];
                inner.emplace(p.name.text, ScopeEntry{bound[i].net, p.type, p.mode, p.name.span});
            }
            elaborate(*sub, inst.component.span, prefix + inst.label.text + ".", std::move(inner), stack);
        }
        stack.pop_back();
    }

    static std::vector<ScopeEntry> bind_ports(const ComponentInstance& inst, const std::vector<FormalPort>& formals,
                                              const std::map<std::string, ScopeEntry, std::less<>>& scope) {
        auto mismatch = [&](const std::string& what, const SourceSpan& span) {
            return ElaborationError(Kind::port_map_mismatch, "instance '" + inst.label.text + "': " + what, span);
        };
        std::vector<std::optional<ScopeEntry>> bound(formals.size());
        for (std::size_t pos = 0; pos < inst.port_map.size(); ++pos) {
            const auto& assoc = inst.port_map[pos];
            std::size_t idx = formals.size();
            if (assoc.formal) {
                for (std::size_t i = 0; i < formals.size(); ++i) {
                    if (formals[i].name == assoc.formal->text) idx = i;
                }
                if (idx == formals.size()) {
                    throw mismatch("'" + inst.component.text + "' has no port '" + assoc.formal->text + "'",
                                   assoc.formal->span);
                }
            } else {
                if (pos >= formals.size()) {
                    throw mismatch("too many actuals for '" + inst.component.text + "'", assoc.span);
                }
                idx = pos;
            }
            const FormalPort& formal = formals[idx];
            if (bound[idx]) {
                throw mismatch("formal '" + formal.name + "' is associated more than once", assoc.span);
            }
            auto it = scope.find(assoc.actual.text);
            if (it == scope.end()) {
                throw ElaborationError(Kind::unknown_signal,
                                       "instance '" + inst.label.text + "': unknown signal '" + assoc.actual.text + "'",
                                       assoc.actual.span);
            }
            const ScopeEntry& actual = it->second;
            if (actual.type != formal.type) {
                throw mismatch("formal '" + formal.name + "' has type " + std::string(frontend::to_string(formal.type)) +
                                   " but '" + assoc.actual.text + "' has type " +
                                   std::string(frontend::to_string(actual.type)),
                               assoc.span);
            }
            if (actual.port_mode && *actual.port_mode != formal.mode) {
                throw mismatch("formal '" + formal.name + "' of mode " + std::string(frontend::to_string(formal.mode)) +
                                   " cannot be associated with port '" + assoc.actual.text + "' of mode " +
                                   std::string(frontend::to_string(*actual.port_mode)),
                               assoc.span);
            }
            bound[idx] = actual;
        }
        std::vector<ScopeEntry> out;
        for (std::size_t i = 0; i < formals.size(); ++i) {
            if (!bound[i]) throw mismatch("formal '" + formals[i].name + "' is not associated", inst.label.span);
            out.push_back(*bound[i]);
        }
        return out;
    }

    void check_bit_drivers() const {
        for (NetId n : nl_.cnets()) {
            std::size_t count = nl_.drivers(n).size();
            const Net& net = nl_.nets[n];
            if (net.top_port && nl_.top_ports[*net.top_port].decl.mode == PortMode::in) ++count;
            if (count > 1) {
                throw ElaborationError(Kind::multiple_drivers,
                                       "bit signal '" + net.name + "' has " + std::to_string(count) + " drivers",
                                       net.span);
            }
        }
    }

    void check_clock() const {
        std::optional<NetId> clock;
        for (const auto& g : nl_.gates) {
            if (g.gate->kind == GateKind::unitary) continue;
            NetId clk = g.net_of("clk");
            const Net& net = nl_.nets[clk];
            if (!net.top_port || nl_.top_ports[*net.top_port].decl.mode != PortMode::in) {
                throw ElaborationError(Kind::clock_domain,
                                       "clock of '" + g.path_label + "' must come from a top-level 'in bit' port",
                                       g.span);
            }
            if (clock && *clock != clk) {
                throw ElaborationError(Kind::clock_domain,
                                       "'" + g.path_label + "' is clocked by '" + net.name + "' but '" +
                                           nl_.nets[*clock].name + "' clocks other gates; only one clock is supported",
                                       g.span);
            }
            clock = clk;
        }
    }

    const DesignFile& design_;
    Netlist nl_;
};

}  // namespace

Netlist bind_and_flatten(const DesignFile& design, std::string_view top) { return Flattener(design).run(top); }

}  // namespace qhdl::elab

#include "qhdl/frontend/printer.hpp"

#include <sstream>

namespace qhdl::frontend {

namespace {

void print_context(std::ostream& os, const ContextItem& item) {
    if (const auto* lib = std::get_if<LibraryClause>(&item)) {
        os << "library ";
        for (std::size_t i = 0; i < lib->names.size(); ++i) os << (i ? ", " : "") << lib->names[i].text;
        os << ";\n";
        return;
    }
    const auto& use = std::get<UseClause>(item);
    os << "use ";
    for (std::size_t i = 0; i < use.path.size(); ++i) os << (i ? "." : "") << use.path[i].text;
    os << ";\n";
}

void print_entity(std::ostream& os, const EntityDecl& ent) {
    os << "entity " << ent.name.text << " is\n";
    if (!ent.ports.empty()) {
        os << "  port (\n";
        for (std::size_t i = 0; i < ent.ports.size(); ++i) {
            const auto& p = ent.ports[i];
            os << "    " << p.name.text << ": " << to_string(p.mode) << ' ' << to_string(p.type)
               << (i + 1 < ent.ports.size() ? ";\n" : "\n");
        }
        os << "  );\n";
    }
    os << "end entity " << ent.name.text << ";\n";
}

void print_non_quantum(std::ostream& os, const NonQuantumStatement& st) {
    os << "  ";
    if (st.label) os << st.label->text << ": ";
    for (std::size_t i = 0; i < st.text.size(); ++i) os << (i ? " " : "") << st.text[i];
    os << '\n';
}

void print_architecture(std::ostream& os, const ArchitectureBody& arch) {
    os << "architecture " << arch.name.text << " of " << arch.entity_name.text << " is\n";
    for (const auto& sig : arch.signals) {
        os << "  signal " << sig.name.text << ": " << to_string(sig.type) << ";\n";
    }
    for (const auto& st : arch.non_quantum) {
        if (st.kind == NonQuantumStatement::Kind::component_declaration) print_non_quantum(os, st);
    }
    os << "begin\n";
    for (const auto& inst : arch.instances) {
        os << "  " << inst.label.text << ": " << inst.component.text;
        if (!inst.port_map.empty()) {
            os << " port map (";
            for (std::size_t i = 0; i < inst.port_map.size(); ++i) {
                const auto& a = inst.port_map[i];
                os << (i ? ", " : " ");
                if (a.formal) os << a.formal->text << " => ";
                os << a.actual.text;
            }
            os << " )";
        }
        os << ";\n";
    }
    for (const auto& st : arch.non_quantum) {
        if (st.kind != NonQuantumStatement::Kind::component_declaration) print_non_quantum(os, st);
    }
    os << "end architecture " << arch.name.text << ";\n";
}

}  // namespace

std::string print(const DesignFile& design) {
    std::ostringstream os;
    for (const auto& item : design.context_clauses) print_context(os, item);
    for (const auto& ent : design.entities) {
        os << '\n';
        print_entity(os, ent);
    }
    for (const auto& arch : design.architectures) {
        os << '\n';
        print_architecture(os, arch);
    }
    return os.str();
}

}  // namespace qhdl::frontend

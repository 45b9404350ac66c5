#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhdl/source.hpp"

namespace qhdl::frontend {

struct Identifier {
    std::string text;
    SourceSpan span;
};

enum class PortMode { in, out };
enum class TypeMark { bit, qbit };

std::string_view to_string(PortMode mode);
std::string_view to_string(TypeMark type);

struct LibraryClause {
    std::vector<Identifier> names;
    SourceSpan span;
};

/// `use qhdl.std.all;` is the only accepted form.
struct UseClause {
    std::vector<Identifier> path;
    SourceSpan span;
};

using ContextItem = std::variant<LibraryClause, UseClause>;

struct PortDecl {
    Identifier name;
    PortMode mode = PortMode::in;
    TypeMark type = TypeMark::bit;
    SourceSpan span;
};

struct EntityDecl {
    Identifier name;
    std::vector<PortDecl> ports;
    SourceSpan span;

    const PortDecl* find_port(std::string_view port) const;
};

struct SignalDecl {
    Identifier name;
    TypeMark type = TypeMark::qbit;
    SourceSpan span;
};

/// One element of a port map. Positional associations have no formal.
struct Association {
    std::optional<Identifier> formal;
    Identifier actual;
    SourceSpan span;
};

struct ComponentInstance {
    Identifier label;
    Identifier component;
    std::vector<Association> port_map;
    SourceSpan span;
};

/// Classical constructs that QHDL forbids. They are parsed only far enough
/// to be skipped and reported; `text` holds their tokens for printing.
struct NonQuantumStatement {
    enum class Kind { process, signal_assignment, component_declaration };
    Kind kind = Kind::process;
    std::optional<Identifier> label;
    std::vector<std::string> text;
    SourceSpan span;
};

std::string_view to_string(NonQuantumStatement::Kind kind);

struct ArchitectureBody {
    Identifier name;
    Identifier entity_name;
    std::vector<SignalDecl> signals;
    std::vector<ComponentInstance> instances;
    std::vector<NonQuantumStatement> non_quantum;
    SourceSpan span;
};

struct DesignFile {
    std::vector<ContextItem> context_clauses;
    std::vector<EntityDecl> entities;
    std::vector<ArchitectureBody> architectures;

    const EntityDecl* find_entity(std::string_view name) const;
};

/// Concatenates several parsed files into one design. Spans keep their
/// originating file names.
DesignFile merge(std::vector<DesignFile> files);

/// Equality of two trees ignoring source spans.
bool structurally_equal(const DesignFile& a, const DesignFile& b);

}  // namespace qhdl::frontend

#pragma once

#include <string>

#include "qhdl/frontend/ast.hpp"

namespace qhdl::frontend {

/// Canonical QHDL text for a tree: context clauses first, then entities,
/// then architectures, one declaration per line, lowercase, named
/// associations where the source had them.
std::string print(const DesignFile& design);

}  // namespace qhdl::frontend

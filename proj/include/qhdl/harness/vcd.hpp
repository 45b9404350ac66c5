#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qhdl/sim/engine.hpp"

namespace qhdl::harness {

class SinkWriteError : public Error {
public:
    using Error::Error;
};

/// Signals of a VCD dump: the clock first, then the remaining top-level
/// bit ports in declaration order.
struct VcdLayout {
    std::string scope;
    std::string clock;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    /// Variable names in identifier order ('!', '"', ...).
    std::vector<std::string> order;
};

VcdLayout vcd_layout(const sim::Engine& engine);

/// Identifier code for the i-th variable: '!'..'~', then two characters.
std::string vcd_identifier(std::size_t index);

/// Writes a 1 fs VCD of the run: every clock edge at first_edge + k*period
/// (falling half a period later), inputs and presented outputs changing at
/// rising edges only. Returns bytes written; throws SinkWriteError when the
/// stream fails.
std::size_t write_vcd(const std::vector<sim::CycleRecord>& records, const sim::ClockConfig& clock,
                      const VcdLayout& layout, std::ostream& sink);

}  // namespace qhdl::harness

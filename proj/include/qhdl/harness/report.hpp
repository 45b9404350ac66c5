#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qhdl/sim/engine.hpp"
#include "qhdl/sim/state_vector.hpp"

namespace qhdl::harness {

struct StateTraceEntry {
    sim::SimTime time;
    std::vector<sim::PolarAmplitude> amplitudes;
};

/// `%.17g`, with negative zero printed as 0.
std::string format_double(double v);

/// One JSON object per entry and line:
/// {"time_fs":5000000,"step":3,"amps":[[0.70710678118654757,0],...]}
std::size_t write_state_trace(const std::vector<StateTraceEntry>& entries, std::ostream& sink);

/// `<bits> <count> <fraction>` per key in lexicographic order, fraction with
/// four decimals, then `total <N>`.
std::string report_histogram(const sim::Histogram& histogram);
std::string report_histogram(const sim::Histogram& histogram, std::ostream& sink);

/// `cycle <k>: a_out=0 b_out=0`, the console line of a tracing testbench.
std::string format_cycle_log(const sim::CycleRecord& record);

}  // namespace qhdl::harness

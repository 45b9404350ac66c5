#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qhdl/elab/compile.hpp"
#include "qhdl/sim/engine.hpp"

namespace qhdl::cli {

/// Process exit codes. Every failure maps to exactly one of these.
enum ExitCode : int {
    kOk = 0,
    kDiagnostics = 1,  // syntax, elaboration, rule or stimulus errors
    kIoError = 2,      // unreadable inputs, unwritable outputs, bad usage
    kSimError = 3,     // runtime failures inside the simulator
    kPortInUse = 4,
};

struct RunConfig {
    std::vector<std::string> sources;
    std::string top;  // empty: the single entity no other entity instantiates
    std::size_t cycles = 101;
    std::uint64_t seed = 42;
    sim::ClockConfig clock;
    std::optional<std::string> stimulus_path;
    std::optional<std::string> vcd_path;
    std::optional<std::string> trace_path;
    std::optional<std::string> wrapper_path;
    std::uint16_t debug_port = 4711;
    std::size_t qubit_limit = elab::kDefaultQubitLimit;
    bool log_cycles = false;
};

struct Console {
    std::ostream& out;
    std::ostream& err;
    bool color = false;
};

int cmd_compile(const RunConfig& config, Console& console);
int cmd_run(const RunConfig& config, Console& console);
int cmd_debug(const RunConfig& config, Console& console);

/// Parses argv and dispatches to a subcommand.
int run_cli(int argc, const char* const* argv, Console& console);

}  // namespace qhdl::cli

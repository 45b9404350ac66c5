#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhdl/elab/compile.hpp"
#include "qhdl/sim/rng.hpp"
#include "qhdl/sim/state_vector.hpp"

namespace qhdl::sim {

using Bit = std::uint8_t;

/// Named bit values kept in port declaration (or schedule) order.
using SignalValues = std::vector<std::pair<std::string, Bit>>;

struct SimTime {
    std::uint64_t time_fs = 0;
    std::uint64_t delta_step = 0;

    auto operator<=>(const SimTime&) const = default;
};

struct ClockConfig {
    std::uint64_t first_edge_fs = 5'000'000;
    std::uint64_t period_fs = 10'000'000;

    std::uint64_t edge(std::uint64_t cycle) const { return first_edge_fs + cycle * period_fs; }
};

struct CycleRecord {
    std::size_t cycle = 0;
    SimTime edge_time;
    SignalValues inputs;             // sampled at this edge; clock excluded
    SignalValues measured;           // measure gate label -> result, schedule order
    SignalValues outputs_presented;  // registered values visible at this edge

    /// Output bits concatenated in port declaration order, e.g. "01".
    std::string output_key() const;

    bool operator==(const CycleRecord&) const = default;
};

/// Per-input defaults plus cycle-indexed overrides. The value of an input at
/// cycle c is the last override at or before c, else its default, else 0.
struct Stimulus {
    struct Override {
        std::uint64_t cycle;
        std::string name;
        Bit value;

        bool operator==(const Override&) const = default;
    };

    std::map<std::string, Bit, std::less<>> defaults;
    std::vector<Override> overrides;  // sorted by cycle, stable

    Bit value_at(std::string_view name, std::uint64_t cycle) const;
    std::map<std::string, Bit, std::less<>> inputs_at(const std::vector<std::string>& names, std::uint64_t cycle) const;
    /// Throws SimulationError(stimulus) for names that are not in `inputs`.
    void validate(const std::vector<std::string>& inputs) const;

    bool operator==(const Stimulus&) const = default;
};

struct Histogram {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;

    void add(const std::string& key) {
        ++counts[key];
        ++total;
    }

    bool operator==(const Histogram&) const = default;
};

struct EngineOptions {
    ClockConfig clock;
    std::uint64_t seed = 42;
    std::size_t qubit_limit = elab::kDefaultQubitLimit;
};

/// Clocked simulation of one compiled design.
///
/// A cycle opens at a rising edge (`begin_cycle`): previously registered
/// outputs are presented and inputs sampled. `step` then executes the
/// schedule one operation at a time, operation k at delta step k of the
/// edge timestamp. `end_cycle` latches the measurement results into the
/// output registers and moves time to the next edge. Results of cycle k
/// therefore appear at edge k+1.
class Engine {
public:
    using StepObserver = std::function<void(SimTime, const StateVector&)>;

    Engine(std::shared_ptr<const elab::CompiledDesign> design, EngineOptions options = {});

    const elab::CompiledDesign& design() const noexcept { return *design_; }
    const EngineOptions& options() const noexcept { return options_; }

    /// Top-level bit inputs other than the clock, declaration order.
    const std::vector<std::string>& input_names() const noexcept { return input_names_; }
    /// Top-level bit outputs, declaration order.
    const std::vector<std::string>& output_names() const noexcept { return output_names_; }
    /// Port driving the setup/measure clocks; nullopt when no gate is clocked.
    const std::optional<std::string>& clock_port() const noexcept { return clock_port_; }

    std::size_t steps_total() const noexcept { return design_->schedule.steps_total(); }
    std::size_t cycle() const noexcept { return cycle_; }
    std::size_t next_step() const noexcept { return next_step_; }
    bool cycle_open() const noexcept { return open_; }
    SimTime now() const noexcept { return now_; }
    const StateVector& state() const noexcept { return state_; }
    SignalValues presented_outputs() const { return presented_; }

    /// Called after every executed operation.
    void set_step_observer(StepObserver observer) { observer_ = std::move(observer); }

    void begin_cycle(const std::map<std::string, Bit, std::less<>>& inputs);
    /// Executes the next scheduled operation and returns it.
    const elab::ScheduledOp& step();
    CycleRecord end_cycle();
    CycleRecord run_cycle(const std::map<std::string, Bit, std::less<>>& inputs);

private:
    void execute(const elab::GateInstance& gate);

    std::shared_ptr<const elab::CompiledDesign> design_;
    EngineOptions options_;
    std::vector<std::string> input_names_;
    std::vector<std::string> output_names_;
    std::optional<std::string> clock_port_;

    StateVector state_;
    Rng rng_;
    std::size_t cycle_ = 0;
    std::size_t next_step_ = 0;
    bool open_ = false;
    SimTime now_;

    std::vector<Bit> net_value_;   // bit nets as seen during the open cycle
    std::vector<Bit> registered_;  // measure result registers, by bit net
    std::vector<Bit> pending_;
    SignalValues presented_;
    CycleRecord current_;
    StepObserver observer_;
};

struct RunResult {
    std::vector<CycleRecord> records;
    Histogram histogram;      // outputs presented at cycles 1..N-1
    std::string reset_key;    // outputs presented at cycle 0
};

/// Runs `cycles` full clock cycles under `stimulus`.
RunResult run(Engine& engine, const Stimulus& stimulus, std::size_t cycles);

}  // namespace qhdl::sim

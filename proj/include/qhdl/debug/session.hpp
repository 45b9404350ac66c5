#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qhdl/sim/engine.hpp"

namespace qhdl::debug {

struct StateMessage {
    std::uint64_t time_fs = 0;
    std::uint64_t step = 0;
    std::size_t steps_total = 0;
    std::size_t cycle = 0;
    std::vector<sim::PolarAmplitude> amplitudes;
    sim::SignalValues outputs;

    nlohmann::json to_json() const;
};

struct EndedMessage {};

using Reply = std::variant<StateMessage, EndedMessage>;

/// One single-step debugging cursor over an engine.
///
/// The engine starts with cycle 0 open and nothing executed. Each step
/// command runs exactly one scheduled operation; when the current cycle is
/// exhausted the next command first closes it, opens the next cycle with
/// inputs from the stimulus and then runs that cycle's first operation.
/// Stepping past the last budgeted cycle yields EndedMessage.
class DebugSession {
public:
    DebugSession(std::shared_ptr<const elab::CompiledDesign> design, sim::EngineOptions options,
                 sim::Stimulus stimulus, std::size_t cycle_budget);

    StateMessage current() const;
    Reply step();
    bool ended() const noexcept { return ended_; }
    const sim::Engine& engine() const noexcept { return engine_; }

    /// Decodes one client frame ({"type":"step"} or {"type":"status"}) and
    /// returns the JSON reply text.
    std::string handle(std::string_view frame);

private:
    sim::Engine engine_;
    sim::Stimulus stimulus_;
    std::size_t budget_;
    bool ended_ = false;
};

std::string to_text(const Reply& reply);

}  // namespace qhdl::debug

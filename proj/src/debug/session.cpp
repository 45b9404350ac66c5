#include "qhdl/debug/session.hpp"

#include <stdexcept>

namespace qhdl::debug {

using nlohmann::json;

json StateMessage::to_json() const {
    json amps = json::array();
    for (const auto& a : amplitudes) amps.push_back({{"mag", a.magnitude}, {"phase", a.phase}});
    json outs = json::object();
    for (const auto& [name, v] : outputs) outs[name] = static_cast<int>(v);
    return json{{"type", "state"},       {"time_fs", time_fs}, {"step", step},     {"steps_total", steps_total},
                {"cycle", cycle},        {"amplitudes", amps}, {"outputs", outs}};
}

DebugSession::DebugSession(std::shared_ptr<const elab::CompiledDesign> design, sim::EngineOptions options,
                           sim::Stimulus stimulus, std::size_t cycle_budget)
    : engine_(std::move(design), options), stimulus_(std::move(stimulus)), budget_(cycle_budget) {
    if (budget_ < 1) throw std::invalid_argument("debug session needs at least one cycle");
    stimulus_.validate(engine_.input_names());
    engine_.begin_cycle(stimulus_.inputs_at(engine_.input_names(), 0));
}

StateMessage DebugSession::current() const {
    StateMessage m;
    m.time_fs = engine_.now().time_fs;
    m.step = engine_.now().delta_step;
    m.steps_total = engine_.steps_total();
    m.cycle = engine_.cycle();
    m.amplitudes = sim::snapshot(engine_.state());
    m.outputs = engine_.presented_outputs();
    return m;
}

Reply DebugSession::step() {
    if (ended_) return EndedMessage{};
    if (engine_.next_step() == engine_.steps_total()) {
        engine_.end_cycle();
        if (engine_.cycle() >= budget_) {
            ended_ = true;
            return EndedMessage{};
        }
        engine_.begin_cycle(stimulus_.inputs_at(engine_.input_names(), engine_.cycle()));
    }
    if (engine_.next_step() < engine_.steps_total()) engine_.step();
    return current();
}

std::string DebugSession::handle(std::string_view frame) {
    auto error = [](const std::string& msg) { return json{{"type", "error"}, {"message", msg}}.dump(); };
    json cmd = json::parse(frame, nullptr, false);
    if (cmd.is_discarded() || !cmd.is_object()) return error("malformed command: expected a JSON object");
    auto type = cmd.find("type");
    if (type == cmd.end() || !type->is_string()) return error("malformed command: missing \"type\"");
    const std::string& t = type->get_ref<const std::string&>();
    if (t == "step") return to_text(step());
    if (t == "status") return ended_ ? to_text(EndedMessage{}) : current().to_json().dump();
    return error("unknown command type '" + t + "'");
}

std::string to_text(const Reply& reply) {
    if (std::holds_alternative<EndedMessage>(reply)) return json{{"type", "ended"}}.dump();
    return std::get<StateMessage>(reply).to_json().dump();
}

}  // namespace qhdl::debug

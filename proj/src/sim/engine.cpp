#include "qhdl/sim/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhdl::sim {

using elab::GateKind;
using elab::NetId;
using frontend::PortMode;
using frontend::TypeMark;

std::string CycleRecord::output_key() const {
    std::string key;
    for (const auto& [name, value] : outputs_presented) key += value ? '1' : '0';
    return key;
}

Bit Stimulus::value_at(std::string_view name, std::uint64_t cycle) const {
    std::optional<Bit> v;
    for (const auto& o : overrides) {
        if (o.cycle > cycle) break;
        if (o.name == name) v = o.value;
    }
    if (v) return *v;
    if (auto it = defaults.find(name); it != defaults.end()) return it->second;
    return 0;
}

std::map<std::string, Bit, std::less<>> Stimulus::inputs_at(const std::vector<std::string>& names,
                                                           std::uint64_t cycle) const {
    std::map<std::string, Bit, std::less<>> out;
    for (const auto& n : names) out.emplace(n, value_at(n, cycle));
    return out;
}

void Stimulus::validate(const std::vector<std::string>& inputs) const {
    auto known = [&](const std::string& n) { return std::find(inputs.begin(), inputs.end(), n) != inputs.end(); };
    for (const auto& [name, value] : defaults) {
        if (!known(name)) {
            throw SimulationError(SimulationError::Kind::stimulus, "stimulus names unknown input '" + name + "'");
        }
    }
    for (const auto& o : overrides) {
        if (!known(o.name)) {
            throw SimulationError(SimulationError::Kind::stimulus, "stimulus names unknown input '" + o.name + "'");
        }
    }
}

namespace {

std::size_t qubit_count(const elab::CompiledDesign& d, std::size_t limit) {
    if (d.wires.n == 0) {
        throw SimulationError(SimulationError::Kind::qubit_limit_exceeded, "design '" + d.netlist.top + "' has no qubits");
    }
    if (d.wires.n > limit) {
        throw SimulationError(SimulationError::Kind::qubit_limit_exceeded,
                              "design needs " + std::to_string(d.wires.n) + " qubits, limit is " +
                                  std::to_string(limit));
    }
    return d.wires.n;
}

}  // namespace

Engine::Engine(std::shared_ptr<const elab::CompiledDesign> design, EngineOptions options)
    : design_(std::move(design)),
      options_(options),
      state_(qubit_count(*design_, options.qubit_limit), options.qubit_limit),
      rng_(options.seed) {
    if (options_.clock.period_fs == 0) throw std::invalid_argument("clock period must be positive");
    const auto& nl = design_->netlist;
    for (const auto& g : nl.gates) {
        if (g.gate->kind != GateKind::unitary) {
            clock_port_ = nl.nets[g.net_of("clk")].name;
            break;
        }
    }
    for (const auto& p : nl.top_ports) {
        if (p.decl.type != TypeMark::bit) continue;
        if (p.decl.mode == PortMode::out) {
            output_names_.push_back(p.decl.name.text);
        } else if (p.decl.name.text != clock_port_) {
            input_names_.push_back(p.decl.name.text);
        }
    }
    net_value_.assign(nl.nets.size(), 0);
    registered_.assign(nl.nets.size(), 0);
    pending_.assign(nl.nets.size(), 0);
    now_ = SimTime{options_.clock.edge(0), 0};
    for (const auto& name : output_names_) presented_.emplace_back(name, 0);
}

void Engine::begin_cycle(const std::map<std::string, Bit, std::less<>>& inputs) {
    if (open_) throw std::logic_error("begin_cycle: cycle already open");
    for (const auto& [name, value] : inputs) {
        if (std::find(input_names_.begin(), input_names_.end(), name) == input_names_.end()) {
            throw SimulationError(SimulationError::Kind::stimulus, "unknown input '" + name + "'");
        }
    }
    const auto& nl = design_->netlist;
    now_ = SimTime{options_.clock.edge(cycle_), 0};

    current_ = CycleRecord{};
    current_.cycle = cycle_;
    current_.edge_time = now_;

    std::fill(net_value_.begin(), net_value_.end(), Bit{0});
    for (const auto& g : nl.gates) {
        if (g.gate->kind == GateKind::measure) {
            NetId r = g.net_of("result");
            net_value_[r] = registered_[r];
        }
    }
    for (const auto& p : nl.top_ports) {
        if (p.decl.type != TypeMark::bit || p.decl.mode != PortMode::in) continue;
        const std::string& name = p.decl.name.text;
        if (name == clock_port_) {
            net_value_[p.net] = 1;
            continue;
        }
        auto it = inputs.find(name);
        Bit v = it == inputs.end() ? 0 : (it->second ? 1 : 0);
        net_value_[p.net] = v;
        current_.inputs.emplace_back(name, v);
    }
    presented_.clear();
    for (const auto& p : nl.top_ports) {
        if (p.decl.type == TypeMark::bit && p.decl.mode == PortMode::out) {
            presented_.emplace_back(p.decl.name.text, net_value_[p.net]);
        }
    }
    current_.outputs_presented = presented_;
    pending_ = registered_;
    next_step_ = 0;
    open_ = true;
}

const elab::ScheduledOp& Engine::step() {
    if (!open_ || next_step_ >= steps_total()) throw std::logic_error("step: no operation pending in this cycle");
    const auto& op = design_->schedule.steps[next_step_];
    now_.delta_step = op.step_index;
    execute(design_->netlist.gates[op.gate]);
    ++next_step_;
    if (observer_) observer_(now_, state_);
    return op;
}

void Engine::execute(const elab::GateInstance& gate) {
    const auto& wires = design_->wires;
    switch (gate.gate->kind) {
        case GateKind::setup: {
            std::size_t q = wires.wire(gate.net_of("d"));
            prepare_qubit(state_, q, net_value_[gate.net_of("set")], rng_);
            break;
        }
        case GateKind::unitary: {
            std::vector<std::size_t> qubits;
            for (std::size_t port : gate.gate->operands) qubits.push_back(wires.wire(gate.pins[port]));
            apply_unitary(state_, gate.gate->op, qubits);
            break;
        }
        case GateKind::measure: {
            std::size_t q = wires.wire(gate.net_of("d"));
            Bit r = static_cast<Bit>(measure_qubit(state_, q, rng_));
            pending_[gate.net_of("result")] = r;
            current_.measured.emplace_back(gate.path_label, r);
            break;
        }
    }
}

CycleRecord Engine::end_cycle() {
    if (!open_ || next_step_ != steps_total()) throw std::logic_error("end_cycle: cycle has pending operations");
    registered_ = pending_;
    open_ = false;
    ++cycle_;
    next_step_ = 0;
    now_ = SimTime{options_.clock.edge(cycle_), 0};
    return std::move(current_);
}

CycleRecord Engine::run_cycle(const std::map<std::string, Bit, std::less<>>& inputs) {
    begin_cycle(inputs);
    while (next_step_ < steps_total()) step();
    return end_cycle();
}

RunResult run(Engine& engine, const Stimulus& stimulus, std::size_t cycles) {
    if (cycles < 1) throw std::invalid_argument("run: cycles must be at least 1");
    stimulus.validate(engine.input_names());
    RunResult result;
    result.records.reserve(cycles);
    for (std::size_t c = 0; c < cycles; ++c) {
        result.records.push_back(engine.run_cycle(stimulus.inputs_at(engine.input_names(), engine.cycle())));
        if (c == 0) {
            result.reset_key = result.records.back().output_key();
        } else {
            result.histogram.add(result.records.back().output_key());
        }
    }
    return result;
}

}  // namespace qhdl::sim

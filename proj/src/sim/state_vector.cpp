#include "qhdl/sim/state_vector.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qhdl::sim {

namespace {

constexpr double kBranchFloor = 1e-12;

void check_qubits(const StateVector& state, std::span<const std::size_t> qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= state.qubits()) {
            throw SimulationError(SimulationError::Kind::index_out_of_range,
                                  "qubit " + std::to_string(qubits[i]) + " out of range for " +
                                      std::to_string(state.qubits()) + "-qubit state");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[j] == qubits[i]) {
                throw SimulationError(SimulationError::Kind::duplicate_qubit,
                                      "qubit " + std::to_string(qubits[i]) + " used twice in one gate");
            }
        }
    }
}

// Swaps amplitude pairs differing in `target`, restricted to basis states
// where every bit of `controls` is set.
void controlled_x(std::span<Amplitude> amps, std::size_t controls, std::size_t target) {
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if ((k & target) == 0 && (k & controls) == controls) std::swap(amps[k], amps[k | target]);
    }
}

void hadamard(std::span<Amplitude> amps, std::size_t target) {
    constexpr double r = std::numbers::sqrt2 / 2.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (k & target) continue;
        const Amplitude a = amps[k];
        const Amplitude b = amps[k | target];
        amps[k] = (a + b) * r;
        amps[k | target] = (a - b) * r;
    }
}

void controlled_swap(std::span<Amplitude> amps, std::size_t control, std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if ((k & control) && (k & a) && !(k & b)) std::swap(amps[k], amps[(k & ~a) | b]);
    }
}

void collapse(StateVector& state, std::size_t qubit, int outcome, double probability) {
    if (probability < kBranchFloor) {
        throw SimulationError(SimulationError::Kind::norm_underflow,
                              "measurement branch probability " + std::to_string(probability) + " on qubit " +
                                  std::to_string(qubit) + " is below 1e-12");
    }
    const std::size_t mask = std::size_t{1} << qubit;
    const double scale = 1.0 / std::sqrt(probability);
    auto amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const bool bit = (k & mask) != 0;
        if (bit == (outcome == 1)) {
            amps[k] *= scale;
        } else {
            amps[k] = 0.0;
        }
    }
}

}  // namespace

StateVector::StateVector(std::size_t n, std::size_t limit) : n_(n) {
    if (n < 1 || n > limit) {
        throw SimulationError(SimulationError::Kind::qubit_limit_exceeded,
                              "cannot allocate " + std::to_string(n) + " qubits (limit " + std::to_string(limit) + ")");
    }
    amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amps.size()) ++n;
    if (amps.size() < 2 || (std::size_t{1} << n) != amps.size()) {
        throw SimulationError(SimulationError::Kind::index_out_of_range,
                              "amplitude count " + std::to_string(amps.size()) + " is not a power of two >= 2");
    }
    StateVector sv;
    sv.n_ = n;
    sv.amps_ = std::move(amps);
    return sv;
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

double StateVector::probability_one(std::size_t qubit) const {
    const std::size_t mask = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if (k & mask) p += std::norm(amps_[k]);
    }
    return p;
}

void apply_unitary(StateVector& state, UnitaryOp op, std::span<const std::size_t> qubits) {
    std::size_t expected = 0;
    switch (op) {
        case UnitaryOp::x:
        case UnitaryOp::hadamard: expected = 1; break;
        case UnitaryOp::cnot: expected = 2; break;
        case UnitaryOp::toffoli:
        case UnitaryOp::fredkin: expected = 3; break;
        case UnitaryOp::none: throw SimulationError(SimulationError::Kind::bad_gate, "not a unitary gate");
    }
    if (qubits.size() != expected) {
        throw SimulationError(SimulationError::Kind::bad_gate, "gate expects " + std::to_string(expected) +
                                                                   " qubits, got " + std::to_string(qubits.size()));
    }
    check_qubits(state, qubits);
    auto bit = [&](std::size_t i) { return std::size_t{1} << qubits[i]; };
    auto amps = state.amplitudes();
    switch (op) {
        case UnitaryOp::x: controlled_x(amps, 0, bit(0)); break;
        case UnitaryOp::hadamard: hadamard(amps, bit(0)); break;
        case UnitaryOp::cnot: controlled_x(amps, bit(0), bit(1)); break;
        case UnitaryOp::toffoli: controlled_x(amps, bit(0) | bit(1), bit(2)); break;
        case UnitaryOp::fredkin: controlled_swap(amps, bit(0), bit(1), bit(2)); break;
        case UnitaryOp::none: break;
    }
}

int measure_qubit(StateVector& state, std::size_t qubit, Rng& rng) {
    const std::size_t q[] = {qubit};
    check_qubits(state, q);
    const std::size_t mask = std::size_t{1} << qubit;
    double p0 = 0.0;
    double p1 = 0.0;
    for (std::size_t k = 0; k < state.size(); ++k) {
        ((k & mask) ? p1 : p0) += std::norm(state[k]);
    }
    const double u = rng.uniform();
    const int outcome = u < p1 ? 1 : 0;
    // The kept branch is renormalised by its own weight so rounding in the
    // incoming norm does not accumulate.
    collapse(state, qubit, outcome, outcome == 1 ? p1 : p0);
    return outcome;
}

void prepare_qubit(StateVector& state, std::size_t qubit, int value, Rng& rng) {
    if (measure_qubit(state, qubit, rng) != value) {
        const std::size_t q[] = {qubit};
        apply_unitary(state, UnitaryOp::x, q);
    }
}

std::vector<PolarAmplitude> snapshot(const StateVector& state) {
    std::vector<PolarAmplitude> out;
    out.reserve(state.size());
    for (const auto& a : state.amplitudes()) {
        const double mag = std::abs(a);
        double phase = 0.0;
        if (mag != 0.0) {
            phase = std::atan2(a.imag(), a.real());
            if (phase <= -std::numbers::pi) phase = std::numbers::pi;
            if (phase == 0.0) phase = 0.0;  // drop the sign of -0
        }
        out.push_back({mag, phase});
    }
    return out;
}

}  // namespace qhdl::sim

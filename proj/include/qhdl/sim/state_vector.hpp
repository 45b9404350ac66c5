#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qhdl/elab/builtins.hpp"
#include "qhdl/elab/wires.hpp"
#include "qhdl/sim/rng.hpp"

namespace qhdl::sim {

using Amplitude = std::complex<double>;
using elab::UnitaryOp;

class SimulationError : public Error {
public:
    enum class Kind { qubit_limit_exceeded, index_out_of_range, duplicate_qubit, norm_underflow, bad_gate, stimulus };

    SimulationError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// The 2^n amplitudes of an n-qubit register. Basis index k has qubit q
/// set iff bit q of k is set (qubit 0 is the least significant bit).
class StateVector {
public:
    /// |0...0> on n qubits; 1 <= n <= limit.
    explicit StateVector(std::size_t n, std::size_t limit = elab::kDefaultQubitLimit);

    /// Wraps explicit amplitudes; size must be a power of two >= 2.
    static StateVector from_amplitudes(std::vector<Amplitude> amps);

    std::size_t qubits() const noexcept { return n_; }
    std::size_t size() const noexcept { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    std::span<Amplitude> amplitudes() noexcept { return amps_; }
    const Amplitude& operator[](std::size_t k) const { return amps_[k]; }

    double norm_squared() const;
    /// Probability of reading 1 on `qubit`.
    double probability_one(std::size_t qubit) const;

private:
    StateVector() = default;

    std::size_t n_ = 0;
    std::vector<Amplitude> amps_;
};

/// Applies a built-in unitary in place. `qubits` follow the operand order of
/// the built-in: target for X/H; control, target for CNOT; two controls,
/// target for Toffoli; control, a, b for Fredkin.
void apply_unitary(StateVector& state, UnitaryOp op, std::span<const std::size_t> qubits);

/// Projective Z measurement of one qubit. Draws u in [0,1) and reports 1
/// iff u < P(1); collapses and renormalises the state.
int measure_qubit(StateVector& state, std::size_t qubit, Rng& rng);

/// Measures `qubit` and flips it when the outcome differs from `value`, so
/// the qubit ends in |value> while the register stays pure and normalised.
/// Always consumes exactly one draw.
void prepare_qubit(StateVector& state, std::size_t qubit, int value, Rng& rng);

struct PolarAmplitude {
    double magnitude;
    double phase;  // radians in (-pi, pi]; 0 for zero amplitudes
};

std::vector<PolarAmplitude> snapshot(const StateVector& state);

}  // namespace qhdl::sim

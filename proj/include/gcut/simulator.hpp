#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gcut/circuit.hpp"
#include "gcut/pauli.hpp"

namespace gcut {

inline constexpr int kMaxSimQubits = 14;
inline constexpr double kExactTol = 1e-10;

/// Amplitudes over 2^n basis states. Qubit 0 is the most significant bit of the
/// index, so the binary spelling of an index is the bitstring with qubit 0 leftmost.
class StateVector {
public:
    explicit StateVector(int n_qubits);
    StateVector(int n_qubits, std::vector<cplx> amplitudes);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] const std::vector<cplx>& amplitudes() const noexcept { return amps_; }
    [[nodiscard]] cplx operator[](std::size_t i) const noexcept { return amps_[i]; }
    [[nodiscard]] double norm() const noexcept;

    void apply(const Gate& gate);
    void apply_matrix(std::span<const int> targets, std::span<const cplx> matrix);

private:
    int n_qubits_;
    std::vector<cplx> amps_;
};

enum class ObservableKind { PauliString, Projector, Distribution };

/// Qubit-wise separable observable on a set of support qubits.
struct ObservableSpec {
    ObservableKind kind = ObservableKind::Distribution;
    std::vector<int> qubits;
    std::vector<Pauli> paulis;  // PauliString: one per support qubit
    std::vector<int> bits;      // Projector: target bit per support qubit

    static ObservableSpec pauli_string(std::vector<int> qubits, std::vector<Pauli> paulis);
    static ObservableSpec projector(std::vector<int> qubits, std::vector<int> bits);
    static ObservableSpec distribution(std::vector<int> qubits);

    /// Parses "dist", a Pauli string such as "XIZ" or "p:010" over wires 0..n-1.
    static ObservableSpec parse(const std::string& text, int n_qubits);

    /// Throws SupportMismatch if malformed or outside `width`.
    void check(int width) const;
};

/// Finite-shot record over `n_bits` measured bits; tally is indexed like StateVector.
struct Counts {
    int n_bits = 0;
    std::uint64_t shots = 0;
    std::vector<std::uint64_t> tally;

    [[nodiscard]] std::vector<double> frequencies() const;
    bool operator==(const Counts&) const = default;
};

std::string bitstring(std::uint64_t index, int n_bits);

/// Applies the gate sequence to the product state `initial` (all |0> when empty).
/// Throws TooWide, InvalidInitial, or InvalidArgument if the circuit still carries cuts.
StateVector simulate(const Circuit& circuit, std::span<const Vec2> initial = {});

double exact_expectation(const StateVector& state, const ObservableSpec& obs);

/// Marginal Born probabilities of `qubits` (qubits[0] most significant).
std::vector<double> exact_distribution(const StateVector& state, std::span<const int> qubits);
std::vector<double> exact_distribution(const StateVector& state);

Counts sample_distribution(std::span<const double> probabilities, int n_bits, std::uint64_t shots,
                           std::uint64_t seed);
Counts sample(const StateVector& state, std::span<const int> qubits, std::uint64_t shots, std::uint64_t seed);

/// Normalized eigenvector of `p` for eigenvalue `sign`; for I, sign +1 gives |0>, -1 gives |1>.
Vec2 eigenstate(Pauli p, int sign);

/// Gates R with R P R^dagger = Z, so a Z readout after them measures P.
std::vector<Gate> basis_rotation(Pauli p, int qubit);

/// Gates taking |0> to the given preparation state.
std::vector<Gate> prep_gates(PrepState state, int qubit);

}  // namespace gcut

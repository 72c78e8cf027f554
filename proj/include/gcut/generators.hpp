#pragma once

#include <cstdint>

#include "gcut/circuit.hpp"

namespace gcut {

/// Upper end of the rotation-angle range used by every generator.
inline constexpr double kMaxAngle = 6.28;
inline constexpr int kAnsatzRetries = 16;

/// Odd-width circuit with one cut on the middle wire (cut_id 1). The upstream
/// block on wires [0, n/2] uses real gates only (RY layers, H, CNOT, CZ), which
/// makes the Y basis golden for computational-basis projectors; the downstream
/// block on [n/2, n) opens each layer with RX rotations followed by random gates.
/// Each instance is certified by exact detection before it is returned.
Circuit golden_ansatz(int n_qubits, int depth, std::uint64_t seed);

/// Layered random circuit. Each layer visits the wires in shuffled order and
/// places either a CNOT on the next two wires (probability 1/2 when two remain)
/// or one of RX, RY, RZ (angle uniform in [0, 6.28]) or H.
Circuit random_circuit(int n_qubits, int depth, std::uint64_t seed);

/// Random circuit with `n_cuts` cuts that bipartitions cleanly: random blocks
/// on an upstream and a downstream wire set that share the cut wires, merged in
/// a random order that keeps every upstream gate on a cut wire before the
/// downstream gates on it.
Circuit random_cut_circuit(int n_qubits, int n_cuts, int depth, std::uint64_t seed);

}  // namespace gcut

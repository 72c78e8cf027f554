#pragma once

#include <vector>

#include "gcut/circuit.hpp"

namespace gcut {

/// A cut wire as seen from one fragment.
struct CutQubit {
    int cut_id;
    int local;

    bool operator==(const CutQubit&) const = default;
};

enum class Side { Upstream, Downstream };

/// Independently executable piece of a cut circuit. Local qubits are the parent
/// wires it owns, in ascending parent order.
struct Fragment {
    Side side = Side::Upstream;
    Circuit circuit;
    std::vector<int> parent_qubits;          // local -> parent wire
    std::vector<CutQubit> upstream_cuts;     // measured here; sorted by cut_id
    std::vector<CutQubit> downstream_cuts;   // prepared here; sorted by cut_id
    std::vector<int> output_qubits;          // local indices read out at the end, ascending

    [[nodiscard]] int width() const noexcept { return circuit.n_qubits(); }
    [[nodiscard]] const std::vector<CutQubit>& interface() const noexcept {
        return side == Side::Upstream ? upstream_cuts : downstream_cuts;
    }
    [[nodiscard]] std::vector<int> cut_ids() const;
};

struct Bipartition {
    Fragment upstream;
    Fragment downstream;
    int parent_width = 0;
};

/// Splits `circuit` at its cut points into an upstream and a downstream fragment.
/// Throws NoCuts, InvalidCircuit, NotBipartite or CyclicCut.
Bipartition bipartition(const Circuit& circuit);

/// Inverse of bipartition: upstream gates, then downstream gates, on parent wires,
/// with the cut points restored.
Circuit stitch(const Bipartition& parts);

}  // namespace gcut

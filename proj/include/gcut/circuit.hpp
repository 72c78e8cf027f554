#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gcut/pauli.hpp"

namespace gcut {

enum class GateKind { RX, RY, RZ, H, X, S, Sdg, CNOT, CZ, Unitary };

std::string gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

/// Number of target qubits a named gate acts on; 0 for Unitary (width from matrix).
std::size_t gate_arity(GateKind kind) noexcept;
/// Number of real parameters a named gate takes.
std::size_t gate_param_count(GateKind kind) noexcept;

inline constexpr std::size_t kMaxOpaqueQubits = 3;

struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;
    std::vector<double> params;
    std::vector<cplx> matrix;  // row-major, only for Unitary

    static Gate rx(int q, double theta) { return {GateKind::RX, {q}, {theta}, {}}; }
    static Gate ry(int q, double theta) { return {GateKind::RY, {q}, {theta}, {}}; }
    static Gate rz(int q, double theta) { return {GateKind::RZ, {q}, {theta}, {}}; }
    static Gate h(int q) { return {GateKind::H, {q}, {}, {}}; }
    static Gate x(int q) { return {GateKind::X, {q}, {}, {}}; }
    static Gate s(int q) { return {GateKind::S, {q}, {}, {}}; }
    static Gate sdg(int q) { return {GateKind::Sdg, {q}, {}, {}}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, {}, {}}; }
    static Gate cz(int a, int b) { return {GateKind::CZ, {a, b}, {}, {}}; }
    static Gate unitary(std::vector<int> qubits, std::vector<cplx> matrix) {
        return {GateKind::Unitary, std::move(qubits), {}, std::move(matrix)};
    }

    bool operator==(const Gate&) const = default;
};

/// Dense matrix of the gate on its own targets; qubits[0] is the most significant local bit.
std::vector<cplx> gate_matrix(const Gate& gate);

/// A wire cut on `qubit`, immediately after gate `after_gate` (which must act on that qubit).
struct CutPoint {
    int qubit = 0;
    int after_gate = 0;
    int cut_id = 1;

    bool operator==(const CutPoint&) const = default;
};

class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int n_qubits) : n_qubits_(n_qubits) {}
    Circuit(int n_qubits, std::vector<Gate> gates, std::vector<CutPoint> cuts = {})
        : n_qubits_(n_qubits), gates_(std::move(gates)), cuts_(std::move(cuts)) {}

    Circuit& add(Gate gate) {
        gates_.push_back(std::move(gate));
        return *this;
    }
    Circuit& add_cut(CutPoint cut) {
        cuts_.push_back(cut);
        return *this;
    }
    /// Cut on `qubit` after the most recently added gate touching it.
    Circuit& cut_here(int qubit, int cut_id);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<Gate>& gates() const noexcept { return gates_; }
    [[nodiscard]] const std::vector<CutPoint>& cuts() const noexcept { return cuts_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    /// Same gates with the cut markers dropped.
    [[nodiscard]] Circuit uncut() const { return Circuit(n_qubits_, gates_); }

    bool operator==(const Circuit&) const = default;

private:
    int n_qubits_ = 0;
    std::vector<Gate> gates_;
    std::vector<CutPoint> cuts_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const Circuit& circuit);

/// Throws CutError(InvalidCircuit) listing every violation.
void require_valid(const Circuit& circuit);

}  // namespace gcut

#include "gcut/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gcut/error.hpp"

namespace gcut {

namespace {

struct KindInfo {
    GateKind kind;
    const char* name;
    std::size_t arity;
    std::size_t params;
};

constexpr KindInfo kKinds[] = {
    {GateKind::RX, "rx", 1, 1},   {GateKind::RY, "ry", 1, 1},     {GateKind::RZ, "rz", 1, 1},
    {GateKind::H, "h", 1, 0},     {GateKind::X, "x", 1, 0},       {GateKind::S, "s", 1, 0},
    {GateKind::Sdg, "sdg", 1, 0}, {GateKind::CNOT, "cnot", 2, 0}, {GateKind::CZ, "cz", 2, 0},
    {GateKind::Unitary, "unitary", 0, 0},
};

const KindInfo& info(GateKind kind) {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k;
    }
    throw CutError(Errc::InvalidArgument, "unknown gate kind");
}

}  // namespace

std::string gate_kind_name(GateKind kind) { return info(kind).name; }

GateKind gate_kind_from_name(const std::string& name) {
    for (const auto& k : kKinds) {
        if (name == k.name) return k.kind;
    }
    throw CutError(Errc::Parse, "unknown gate kind '" + name + "'");
}

std::size_t gate_arity(GateKind kind) noexcept {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k.arity;
    }
    return 0;
}

std::size_t gate_param_count(GateKind kind) noexcept {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k.params;
    }
    return 0;
}

std::vector<cplx> gate_matrix(const Gate& gate) {
    const cplx i{0.0, 1.0};
    const double h = M_SQRT1_2;
    switch (gate.kind) {
        case GateKind::RX: {
            const double c = std::cos(gate.params.at(0) / 2), s = std::sin(gate.params.at(0) / 2);
            return {c, -i * s, -i * s, c};
        }
        case GateKind::RY: {
            const double c = std::cos(gate.params.at(0) / 2), s = std::sin(gate.params.at(0) / 2);
            return {c, -s, s, c};
        }
        case GateKind::RZ: {
            const double half = gate.params.at(0) / 2;
            return {std::polar(1.0, -half), 0.0, 0.0, std::polar(1.0, half)};
        }
        case GateKind::H: return {h, h, h, -h};
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::S: return {1.0, 0.0, 0.0, i};
        case GateKind::Sdg: return {1.0, 0.0, 0.0, -i};
        case GateKind::CNOT:
            return {1, 0, 0, 0,  //
                    0, 1, 0, 0,  //
                    0, 0, 0, 1,  //
                    0, 0, 1, 0};
        case GateKind::CZ:
            return {1, 0, 0, 0,  //
                    0, 1, 0, 0,  //
                    0, 0, 1, 0,  //
                    0, 0, 0, -1};
        case GateKind::Unitary: return gate.matrix;
    }
    return {};
}

Circuit& Circuit::cut_here(int qubit, int cut_id) {
    for (int g = static_cast<int>(gates_.size()) - 1; g >= 0; --g) {
        const auto& qs = gates_[g].qubits;
        if (std::find(qs.begin(), qs.end(), qubit) != qs.end()) {
            cuts_.push_back({qubit, g, cut_id});
            return *this;
        }
    }
    throw CutError(Errc::InvalidArgument, "no gate on qubit " + std::to_string(qubit) + " to cut after");
}

namespace {

bool is_unitary(const std::vector<cplx>& m, std::size_t dim, double tol) {
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            cplx dot = 0.0;
            for (std::size_t r = 0; r < dim; ++r) dot += std::conj(m[r * dim + a]) * m[r * dim + b];
            if (std::abs(dot - (a == b ? 1.0 : 0.0)) > tol) return false;
        }
    }
    return true;
}

}  // namespace

ValidationReport validate(const Circuit& circuit) {
    ValidationReport report;
    auto fail = [&](std::size_t g, const std::string& msg) {
        std::ostringstream os;
        os << "gate " << g << ": " << msg;
        report.violations.push_back(os.str());
    };
    const int n = circuit.n_qubits();
    if (n < 1) report.violations.push_back("circuit needs at least one qubit");

    const auto& gates = circuit.gates();
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const Gate& gate = gates[g];
        for (int q : gate.qubits) {
            if (q < 0 || q >= n) fail(g, "qubit out of range (" + std::to_string(q) + ")");
        }
        std::set<int> distinct(gate.qubits.begin(), gate.qubits.end());
        if (distinct.size() != gate.qubits.size()) fail(g, "repeated target qubit");
        if (gate.qubits.empty()) fail(g, "no target qubits");

        if (gate.kind == GateKind::Unitary) {
            const std::size_t k = gate.qubits.size();
            if (k > kMaxOpaqueQubits) {
                fail(g, "opaque gate wider than 3 qubits");
                continue;
            }
            const std::size_t dim = std::size_t{1} << k;
            if (gate.matrix.size() != dim * dim) {
                fail(g, "matrix size does not match target count");
            } else if (!is_unitary(gate.matrix, dim, 1e-10)) {
                fail(g, "non-unitary");
            }
        } else {
            if (gate.qubits.size() != gate_arity(gate.kind)) fail(g, "wrong number of targets");
            if (gate.params.size() != gate_param_count(gate.kind)) fail(g, "wrong number of parameters");
            for (double p : gate.params) {
                if (!std::isfinite(p)) fail(g, "non-finite parameter");
            }
        }
    }

    std::set<std::pair<int, int>> positions;
    std::set<int> ids;
    for (const CutPoint& cut : circuit.cuts()) {
        std::ostringstream os;
        os << "cut " << cut.cut_id << ": ";
        const std::string prefix = os.str();
        if (cut.qubit < 0 || cut.qubit >= n) {
            report.violations.push_back(prefix + "qubit out of range");
        }
        if (cut.after_gate < 0 || cut.after_gate >= static_cast<int>(gates.size())) {
            report.violations.push_back(prefix + "after_gate out of range");
        } else {
            const auto& qs = gates[cut.after_gate].qubits;
            if (std::find(qs.begin(), qs.end(), cut.qubit) == qs.end()) {
                report.violations.push_back(prefix + "gate " + std::to_string(cut.after_gate) +
                                            " does not act on the cut qubit");
            }
        }
        if (!positions.insert({cut.qubit, cut.after_gate}).second) {
            report.violations.push_back(prefix + "duplicate cut position");
        }
        if (!ids.insert(cut.cut_id).second) report.violations.push_back(prefix + "duplicate cut_id");
    }
    return report;
}

void require_valid(const Circuit& circuit) {
    const auto report = validate(circuit);
    if (report.ok()) return;
    std::string msg;
    for (const auto& v : report.violations) {
        if (!msg.empty()) msg += "; ";
        msg += v;
    }
    throw CutError(Errc::InvalidCircuit, msg);
}

}  // namespace gcut

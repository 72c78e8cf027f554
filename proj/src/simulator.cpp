#include "gcut/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "gcut/error.hpp"
#include "gcut/rng.hpp"

namespace gcut {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 0 || n_qubits > kMaxSimQubits) {
        throw CutError(Errc::TooWide, std::to_string(n_qubits) + " qubits exceeds the simulation cap of " +
                                          std::to_string(kMaxSimQubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, 0.0);
    amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 0 || n_qubits > kMaxSimQubits) throw CutError(Errc::TooWide, "state too wide");
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw CutError(Errc::InvalidArgument, "amplitude count does not match qubit count");
    }
}

double StateVector::norm() const noexcept {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::apply(const Gate& gate) {
    const auto m = gate_matrix(gate);
    apply_matrix(gate.qubits, m);
}

void StateVector::apply_matrix(std::span<const int> targets, std::span<const cplx> matrix) {
    const std::size_t k = targets.size();
    const std::size_t sub = std::size_t{1} << k;
    if (matrix.size() != sub * sub) throw CutError(Errc::InvalidArgument, "matrix does not match targets");

    // Bit mask in the state index for each target; targets[0] is the local MSB.
    std::vector<std::size_t> masks(k);
    std::size_t all = 0;
    for (std::size_t t = 0; t < k; ++t) {
        if (targets[t] < 0 || targets[t] >= n_qubits_) throw CutError(Errc::InvalidArgument, "target out of range");
        masks[t] = std::size_t{1} << (n_qubits_ - 1 - targets[t]);
        all |= masks[t];
    }
    std::vector<std::size_t> offset(sub, 0);
    for (std::size_t local = 0; local < sub; ++local) {
        for (std::size_t t = 0; t < k; ++t) {
            if (local & (std::size_t{1} << (k - 1 - t))) offset[local] |= masks[t];
        }
    }

    std::vector<cplx> in(sub), out(sub);
    for (std::size_t base = 0; base < amps_.size(); ++base) {
        if (base & all) continue;
        for (std::size_t j = 0; j < sub; ++j) in[j] = amps_[base | offset[j]];
        for (std::size_t r = 0; r < sub; ++r) {
            cplx acc = 0.0;
            for (std::size_t c = 0; c < sub; ++c) acc += matrix[r * sub + c] * in[c];
            out[r] = acc;
        }
        for (std::size_t j = 0; j < sub; ++j) amps_[base | offset[j]] = out[j];
    }
}

ObservableSpec ObservableSpec::pauli_string(std::vector<int> qubits, std::vector<Pauli> paulis) {
    ObservableSpec o;
    o.kind = ObservableKind::PauliString;
    o.qubits = std::move(qubits);
    o.paulis = std::move(paulis);
    return o;
}

ObservableSpec ObservableSpec::projector(std::vector<int> qubits, std::vector<int> bits) {
    ObservableSpec o;
    o.kind = ObservableKind::Projector;
    o.qubits = std::move(qubits);
    o.bits = std::move(bits);
    return o;
}

ObservableSpec ObservableSpec::distribution(std::vector<int> qubits) {
    ObservableSpec o;
    o.kind = ObservableKind::Distribution;
    o.qubits = std::move(qubits);
    return o;
}

ObservableSpec ObservableSpec::parse(const std::string& text, int n_qubits) {
    std::vector<int> all(n_qubits);
    for (int q = 0; q < n_qubits; ++q) all[q] = q;
    if (text.empty() || text == "dist") return distribution(all);
    if (text.rfind("p:", 0) == 0) {
        const std::string b = text.substr(2);
        if (static_cast<int>(b.size()) != n_qubits) throw CutError(Errc::SupportMismatch, "projector length");
        std::vector<int> bits;
        for (char c : b) {
            if (c != '0' && c != '1') throw CutError(Errc::Parse, "projector bits must be 0/1");
            bits.push_back(c - '0');
        }
        return projector(all, bits);
    }
    if (static_cast<int>(text.size()) != n_qubits) throw CutError(Errc::SupportMismatch, "Pauli string length");
    std::vector<Pauli> ps;
    for (char c : text) {
        const auto p = pauli_from_char(c);
        if (!p) throw CutError(Errc::Parse, std::string("bad Pauli label '") + c + "'");
        ps.push_back(*p);
    }
    return pauli_string(all, ps);
}

void ObservableSpec::check(int width) const {
    for (int q : qubits) {
        if (q < 0 || q >= width) throw CutError(Errc::SupportMismatch, "observable support outside state");
    }
    std::vector<int> sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw CutError(Errc::SupportMismatch, "repeated support qubit");
    }
    if (kind == ObservableKind::PauliString && paulis.size() != qubits.size()) {
        throw CutError(Errc::SupportMismatch, "Pauli string length differs from support");
    }
    if (kind == ObservableKind::Projector) {
        if (bits.size() != qubits.size()) throw CutError(Errc::SupportMismatch, "projector length differs from support");
        for (int b : bits) {
            if (b != 0 && b != 1) throw CutError(Errc::SupportMismatch, "projector bits must be 0/1");
        }
    }
}

std::vector<double> Counts::frequencies() const {
    std::vector<double> f(tally.size(), 0.0);
    if (shots == 0) return f;
    for (std::size_t i = 0; i < tally.size(); ++i) f[i] = static_cast<double>(tally[i]) / static_cast<double>(shots);
    return f;
}

std::string bitstring(std::uint64_t index, int n_bits) {
    std::string s(static_cast<std::size_t>(n_bits), '0');
    for (int b = 0; b < n_bits; ++b) {
        if (index & (std::uint64_t{1} << (n_bits - 1 - b))) s[b] = '1';
    }
    return s;
}

StateVector simulate(const Circuit& circuit, std::span<const Vec2> initial) {
    if (!circuit.cuts().empty()) {
        throw CutError(Errc::InvalidArgument, "simulate expects a circuit without cut points");
    }
    const int n = circuit.n_qubits();
    if (n > kMaxSimQubits) {
        throw CutError(Errc::TooWide, std::to_string(n) + " qubits exceeds the simulation cap of " +
                                          std::to_string(kMaxSimQubits));
    }
    require_valid(circuit);

    StateVector state(n);
    if (!initial.empty()) {
        if (static_cast<int>(initial.size()) != n) {
            throw CutError(Errc::InvalidInitial, "need one initial state per qubit");
        }
        std::vector<cplx> amps(std::size_t{1} << n);
        for (const auto& v : initial) {
            const double nrm = std::norm(v[0]) + std::norm(v[1]);
            if (std::abs(nrm - 1.0) > kExactTol) throw CutError(Errc::InvalidInitial, "initial state not normalized");
        }
        for (std::size_t idx = 0; idx < amps.size(); ++idx) {
            cplx a = 1.0;
            for (int q = 0; q < n; ++q) a *= initial[q][(idx >> (n - 1 - q)) & 1U];
            amps[idx] = a;
        }
        state = StateVector(n, std::move(amps));
    }
    for (const Gate& g : circuit.gates()) state.apply(g);
    return state;
}

double exact_expectation(const StateVector& state, const ObservableSpec& obs) {
    obs.check(state.n_qubits());
    const int n = state.n_qubits();
    const auto& amps = state.amplitudes();
    switch (obs.kind) {
        case ObservableKind::Projector: {
            double p = 0.0;
            for (std::size_t idx = 0; idx < amps.size(); ++idx) {
                bool match = true;
                for (std::size_t j = 0; j < obs.qubits.size() && match; ++j) {
                    match = static_cast<int>((idx >> (n - 1 - obs.qubits[j])) & 1U) == obs.bits[j];
                }
                if (match) p += std::norm(amps[idx]);
            }
            return p;
        }
        case ObservableKind::PauliString: {
            StateVector applied = state;
            for (std::size_t j = 0; j < obs.qubits.size(); ++j) {
                if (obs.paulis[j] == Pauli::I) continue;
                const Mat2 m = pauli_matrix(obs.paulis[j]);
                const int target[] = {obs.qubits[j]};
                applied.apply_matrix(target, m);
            }
            cplx v = 0.0;
            for (std::size_t idx = 0; idx < amps.size(); ++idx) v += std::conj(amps[idx]) * applied[idx];
            if (std::abs(v.imag()) > kExactTol) {
                throw CutError(Errc::InvalidArgument, "expectation has a non-negligible imaginary part");
            }
            return v.real();
        }
        case ObservableKind::Distribution: break;
    }
    throw CutError(Errc::SupportMismatch, "a distribution marker has no scalar expectation");
}

std::vector<double> exact_distribution(const StateVector& state, std::span<const int> qubits) {
    const int n = state.n_qubits();
    for (int q : qubits) {
        if (q < 0 || q >= n) throw CutError(Errc::SupportMismatch, "distribution qubit outside state");
    }
    const std::size_t k = qubits.size();
    std::vector<double> probs(std::size_t{1} << k, 0.0);
    const auto& amps = state.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        std::size_t out = 0;
        for (std::size_t j = 0; j < k; ++j) out = (out << 1) | ((idx >> (n - 1 - qubits[j])) & 1U);
        probs[out] += std::norm(amps[idx]);
    }
    return probs;
}

std::vector<double> exact_distribution(const StateVector& state) {
    std::vector<int> all(state.n_qubits());
    for (int q = 0; q < state.n_qubits(); ++q) all[q] = q;
    return exact_distribution(state, all);
}

Counts sample_distribution(std::span<const double> probabilities, int n_bits, std::uint64_t shots,
                           std::uint64_t seed) {
    if (probabilities.size() != (std::size_t{1} << n_bits)) {
        throw CutError(Errc::InvalidArgument, "distribution size does not match bit count");
    }
    std::vector<double> cdf(probabilities.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        acc += std::max(0.0, probabilities[i]);
        cdf[i] = acc;
    }
    Counts counts{n_bits, shots, std::vector<std::uint64_t>(probabilities.size(), 0)};
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        // Skip zero-probability outcomes sharing the boundary.
        while (it != cdf.begin() && *it == *(it - 1)) --it;
        ++counts.tally[static_cast<std::size_t>(it - cdf.begin())];
    }
    return counts;
}

Counts sample(const StateVector& state, std::span<const int> qubits, std::uint64_t shots, std::uint64_t seed) {
    const auto probs = exact_distribution(state, qubits);
    return sample_distribution(probs, static_cast<int>(qubits.size()), shots, seed);
}

Vec2 eigenstate(Pauli p, int sign) {
    if (sign != 1 && sign != -1) throw CutError(Errc::InvalidArgument, "eigenstate sign must be +1 or -1");
    return prep_vector(prep_for(p, sign));
}

std::vector<Gate> basis_rotation(Pauli p, int qubit) {
    switch (p) {
        case Pauli::I: throw CutError(Errc::IdentityBasisRequested, "I is read from Z-setting data");
        case Pauli::X: return {Gate::h(qubit)};
        case Pauli::Y: return {Gate::sdg(qubit), Gate::h(qubit)};
        case Pauli::Z: return {};
    }
    return {};
}

std::vector<Gate> prep_gates(PrepState state, int qubit) {
    switch (state) {
        case PrepState::Zero: return {};
        case PrepState::One: return {Gate::x(qubit)};
        case PrepState::Plus: return {Gate::h(qubit)};
        case PrepState::Minus: return {Gate::x(qubit), Gate::h(qubit)};
        case PrepState::PlusI: return {Gate::h(qubit), Gate::s(qubit)};
        case PrepState::MinusI: return {Gate::x(qubit), Gate::h(qubit), Gate::s(qubit)};
    }
    return {};
}

}  // namespace gcut

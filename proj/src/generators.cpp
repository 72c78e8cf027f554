#include "gcut/generators.hpp"

#include <algorithm>
#include <numeric>

#include "gcut/error.hpp"
#include "gcut/golden.hpp"
#include "gcut/rng.hpp"

namespace gcut {

namespace {

Gate random_single(SplitMix64& rng, int q) {
    switch (rng.below(4)) {
        case 0: return Gate::rx(q, rng.uniform(0.0, kMaxAngle));
        case 1: return Gate::ry(q, rng.uniform(0.0, kMaxAngle));
        case 2: return Gate::rz(q, rng.uniform(0.0, kMaxAngle));
        default: return Gate::h(q);
    }
}

template <class T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

// Random layers on `wires` (parent indices), appended to `out`.
void random_layers(std::vector<Gate>& out, const std::vector<int>& wires, int depth, SplitMix64& rng) {
    for (int d = 0; d < depth; ++d) {
        std::vector<int> order = wires;
        shuffle(order, rng);
        std::size_t i = 0;
        while (i < order.size()) {
            if (i + 1 < order.size() && rng.below(2) == 0) {
                out.push_back(Gate::cnot(order[i], order[i + 1]));
                i += 2;
            } else {
                out.push_back(random_single(rng, order[i]));
                ++i;
            }
        }
    }
}

// Entangling chain through `wires` in random order so the block is connected.
void spanning_chain(std::vector<Gate>& out, std::vector<int> wires, SplitMix64& rng) {
    shuffle(wires, rng);
    for (std::size_t i = 0; i + 1 < wires.size(); ++i) {
        if (rng.below(2) == 0) {
            out.push_back(Gate::cnot(wires[i], wires[i + 1]));
        } else {
            out.push_back(Gate::cnot(wires[i + 1], wires[i]));
        }
    }
    for (int w : wires) out.push_back(random_single(rng, w));
}

Circuit build_ansatz(int n, int depth, SplitMix64& rng) {
    const int mid = (n - 1) / 2;
    Circuit c(n);
    for (int d = 0; d < depth; ++d) {
        for (int q = 0; q <= mid; ++q) c.add(Gate::ry(q, rng.uniform(0.0, kMaxAngle)));
        for (int q = 0; q < mid; ++q) {
            switch (rng.below(3)) {
                case 0: c.add(Gate::cnot(q, q + 1)); break;
                case 1: c.add(Gate::cnot(q + 1, q)); break;
                default: c.add(Gate::cz(q, q + 1)); break;
            }
        }
        if (rng.below(2) == 0) c.add(Gate::h(static_cast<int>(rng.below(mid + 1))));
    }
    c.cut_here(mid, 1);
    for (int d = 0; d < depth; ++d) {
        for (int q = mid; q < n; ++q) c.add(Gate::rx(q, rng.uniform(0.0, kMaxAngle)));
        for (int q = mid; q + 1 < n; ++q) {
            if (rng.below(2) == 0) {
                c.add(Gate::cnot(q, q + 1));
            } else {
                c.add(Gate::cz(q, q + 1));
            }
        }
        const int extra = mid + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - mid)));
        c.add(random_single(rng, extra));
    }
    return c;
}

bool certified_y_golden(const Circuit& c) {
    const Bipartition parts = bipartition(c);
    std::vector<int> all(c.n_qubits());
    std::iota(all.begin(), all.end(), 0);
    const ObservableSpec local = localize(ObservableSpec::distribution(all), parts.upstream);
    const auto run = run_fragment(parts.upstream, upstream_variants(parts.upstream, {}, local), ExecMode::exact_mode());
    const auto tensor = build_tensor(run.results, parts.upstream, local);
    return detect_exact(tensor, kGenerationEps).is_golden(1, Pauli::Y);
}

}  // namespace

Circuit golden_ansatz(int n_qubits, int depth, std::uint64_t seed) {
    if (n_qubits < 3 || n_qubits > 9 || n_qubits % 2 == 0) {
        throw CutError(Errc::InvalidArgument, "odd width required (3, 5, 7 or 9 qubits)");
    }
    if (depth < 1) throw CutError(Errc::InvalidArgument, "depth must be at least 1");
    for (int attempt = 0; attempt < kAnsatzRetries; ++attempt) {
        SplitMix64 rng(derive_seed(seed, {kStreamGenerator, static_cast<std::uint64_t>(attempt)}));
        Circuit c = build_ansatz(n_qubits, depth, rng);
        if (certified_y_golden(c)) return c;
    }
    throw CutError(Errc::AnsatzNotGolden, "Y basis not golden after " + std::to_string(kAnsatzRetries) + " attempts");
}

Circuit random_circuit(int n_qubits, int depth, std::uint64_t seed) {
    if (n_qubits < 1) throw CutError(Errc::InvalidArgument, "need at least one qubit");
    if (depth < 0) throw CutError(Errc::InvalidArgument, "negative depth");
    SplitMix64 rng(seed);
    std::vector<int> wires(n_qubits);
    std::iota(wires.begin(), wires.end(), 0);
    std::vector<Gate> gates;
    random_layers(gates, wires, depth, rng);
    return Circuit(n_qubits, std::move(gates));
}

Circuit random_cut_circuit(int n_qubits, int n_cuts, int depth, std::uint64_t seed) {
    if (n_cuts < 1 || n_cuts >= n_qubits) throw CutError(Errc::InvalidArgument, "need 1 <= cuts < qubits");
    SplitMix64 rng(seed);

    std::vector<int> wires(n_qubits);
    std::iota(wires.begin(), wires.end(), 0);
    shuffle(wires, rng);
    const std::vector<int> cut_wires(wires.begin(), wires.begin() + n_cuts);
    const int rest = n_qubits - n_cuts;
    const int n_up = static_cast<int>(rng.below(static_cast<std::uint64_t>(rest) + 1));
    std::vector<int> up(cut_wires), down(cut_wires);
    up.insert(up.end(), wires.begin() + n_cuts, wires.begin() + n_cuts + n_up);
    down.insert(down.end(), wires.begin() + n_cuts + n_up, wires.end());

    std::vector<Gate> up_gates, down_gates;
    spanning_chain(up_gates, up, rng);
    random_layers(up_gates, up, depth, rng);
    spanning_chain(down_gates, down, rng);
    random_layers(down_gates, down, depth, rng);

    // Count upstream gates still pending on each cut wire.
    std::vector<int> pending(n_qubits, 0);
    for (const Gate& g : up_gates) {
        for (int q : g.qubits) ++pending[q];
    }
    auto touches_pending = [&](const Gate& g) {
        return std::any_of(g.qubits.begin(), g.qubits.end(), [&](int q) { return pending[q] > 0; });
    };

    Circuit c(n_qubits);
    std::vector<int> last_up(n_qubits, -1);
    std::size_t iu = 0, id = 0;
    while (iu < up_gates.size() || id < down_gates.size()) {
        const bool down_ready = id < down_gates.size() && !touches_pending(down_gates[id]);
        const bool take_up = iu < up_gates.size() && (!down_ready || rng.below(2) == 0);
        if (take_up) {
            for (int q : up_gates[iu].qubits) {
                --pending[q];
                last_up[q] = static_cast<int>(c.size());
            }
            c.add(up_gates[iu++]);
        } else {
            c.add(down_gates[id++]);
        }
    }
    for (int k = 0; k < n_cuts; ++k) c.add_cut({cut_wires[k], last_up[cut_wires[k]], k + 1});
    return c;
}

}  // namespace gcut

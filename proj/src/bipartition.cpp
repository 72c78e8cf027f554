#include "gcut/bipartition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gcut/error.hpp"

namespace gcut {

std::vector<int> Fragment::cut_ids() const {
    std::vector<int> ids;
    for (const auto& c : interface()) ids.push_back(c.cut_id);
    return ids;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

// Each wire is split into segments at its cut points; segment s of wire q holds
// the gates between the s-th and (s+1)-th cut on that wire.
struct Segments {
    std::vector<std::vector<int>> cut_after;  // per wire, sorted after_gate positions
    std::vector<std::size_t> first;           // id of segment 0 of each wire
    std::size_t total = 0;

    explicit Segments(const Circuit& c) : cut_after(c.n_qubits()), first(c.n_qubits()) {
        for (const auto& cut : c.cuts()) cut_after[cut.qubit].push_back(cut.after_gate);
        for (int q = 0; q < c.n_qubits(); ++q) {
            std::sort(cut_after[q].begin(), cut_after[q].end());
            first[q] = total;
            total += cut_after[q].size() + 1;
        }
    }

    [[nodiscard]] std::size_t of_gate(int q, int gate_index) const {
        const auto& cuts = cut_after[q];
        const auto before = std::lower_bound(cuts.begin(), cuts.end(), gate_index) - cuts.begin();
        return first[q] + static_cast<std::size_t>(before);
    }
    [[nodiscard]] std::size_t last(int q) const { return first[q] + cut_after[q].size(); }
};

Fragment make_fragment(const Circuit& parent, Side side, std::size_t root, const Segments& segs,
                       DisjointSets& sets) {
    Fragment f;
    f.side = side;
    std::map<int, int> local;  // parent wire -> local index
    for (int q = 0; q < parent.n_qubits(); ++q) {
        for (std::size_t s = segs.first[q]; s <= segs.last(q); ++s) {
            if (sets.find(s) == root) {
                local.emplace(q, static_cast<int>(local.size()));
                f.parent_qubits.push_back(q);
                if (s == segs.last(q)) f.output_qubits.push_back(local[q]);
            }
        }
    }
    Circuit circuit(static_cast<int>(f.parent_qubits.size()));
    const auto& gates = parent.gates();
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const int q0 = gates[g].qubits.front();
        if (sets.find(segs.of_gate(q0, static_cast<int>(g))) != root) continue;
        Gate mapped = gates[g];
        for (int& q : mapped.qubits) q = local.at(q);
        circuit.add(std::move(mapped));
    }
    f.circuit = std::move(circuit);

    auto sorted_cuts = parent.cuts();
    std::sort(sorted_cuts.begin(), sorted_cuts.end(),
              [](const CutPoint& a, const CutPoint& b) { return a.cut_id < b.cut_id; });
    for (const auto& cut : sorted_cuts) {
        const int l = local.at(cut.qubit);
        (side == Side::Upstream ? f.upstream_cuts : f.downstream_cuts).push_back({cut.cut_id, l});
    }
    return f;
}

}  // namespace

Bipartition bipartition(const Circuit& circuit) {
    if (circuit.cuts().empty()) throw CutError(Errc::NoCuts, "circuit has no cut points");
    require_valid(circuit);

    const Segments segs(circuit);
    DisjointSets sets(segs.total);
    const auto& gates = circuit.gates();
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const auto& qs = gates[g].qubits;
        const std::size_t anchor = segs.of_gate(qs.front(), static_cast<int>(g));
        for (int q : qs) sets.unite(anchor, segs.of_gate(q, static_cast<int>(g)));
    }

    std::set<std::size_t> roots;
    for (std::size_t s = 0; s < segs.total; ++s) roots.insert(sets.find(s));

    std::set<std::size_t> up_roots, down_roots;
    for (const auto& cut : circuit.cuts()) {
        const std::size_t before = segs.of_gate(cut.qubit, cut.after_gate);
        const std::size_t b = sets.find(before), a = sets.find(before + 1);
        if (a == b) {
            throw CutError(Errc::NotBipartite,
                           "cut " + std::to_string(cut.cut_id) + " does not separate the circuit");
        }
        up_roots.insert(b);
        down_roots.insert(a);
    }
    for (std::size_t r : up_roots) {
        if (down_roots.count(r)) {
            throw CutError(Errc::CyclicCut, "a fragment is both measured and prepared across the cuts");
        }
    }
    if (up_roots.size() != 1 || down_roots.size() != 1 || roots.size() != 2) {
        throw CutError(Errc::NotBipartite,
                       "cuts leave " + std::to_string(roots.size()) + " components, expected 2");
    }

    Bipartition parts;
    parts.parent_width = circuit.n_qubits();
    parts.upstream = make_fragment(circuit, Side::Upstream, *up_roots.begin(), segs, sets);
    parts.downstream = make_fragment(circuit, Side::Downstream, *down_roots.begin(), segs, sets);
    return parts;
}

Circuit stitch(const Bipartition& parts) {
    Circuit out(parts.parent_width);
    std::map<int, int> last_upstream_gate;  // parent wire -> stitched gate index
    for (const Fragment* f : {&parts.upstream, &parts.downstream}) {
        for (const Gate& g : f->circuit.gates()) {
            Gate mapped = g;
            for (int& q : mapped.qubits) q = f->parent_qubits.at(q);
            if (f->side == Side::Upstream) {
                for (int q : mapped.qubits) last_upstream_gate[q] = static_cast<int>(out.size());
            }
            out.add(std::move(mapped));
        }
    }
    for (const auto& c : parts.upstream.upstream_cuts) {
        const int wire = parts.upstream.parent_qubits.at(c.local);
        out.add_cut({wire, last_upstream_gate.at(wire), c.cut_id});
    }
    return out;
}

}  // namespace gcut

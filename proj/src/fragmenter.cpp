#include "gcut/fragmenter.hpp"

#include <algorithm>
#include <sstream>

#include "gcut/error.hpp"
#include "gcut/rng.hpp"

namespace gcut {

std::string neglect_to_string(const NeglectSet& neglected) {
    std::string out;
    for (const auto& [cut, p] : neglected) {
        if (!out.empty()) out += ",";
        out += std::to_string(cut) + ":" + pauli_char(p);
    }
    return out;
}

NeglectSet parse_neglect(const std::string& text) {
    NeglectSet out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos || colon + 2 != item.size()) {
            throw CutError(Errc::Parse, "expected cut:basis, got '" + item + "'");
        }
        const auto p = pauli_from_char(item.back());
        if (!p) throw CutError(Errc::Parse, "bad basis in '" + item + "'");
        out.insert({std::stoi(item.substr(0, colon)), *p});
    }
    return out;
}

std::uint64_t VariantKey::code() const noexcept {
    std::uint64_t h = side == Side::Upstream ? 0x75ULL : 0xd5ULL;
    for (const auto& [cut, p] : bases) h = h * 1000003ULL + static_cast<std::uint64_t>(cut) * 16 + static_cast<int>(p);
    for (const auto& [cut, s] : preps) h = h * 1000003ULL + static_cast<std::uint64_t>(cut) * 16 + static_cast<int>(s);
    return h;
}

std::string VariantKey::to_string() const {
    std::string out;
    for (const auto& [cut, p] : bases) out += (out.empty() ? "" : ",") + std::to_string(cut) + ":" + pauli_char(p);
    for (const auto& [cut, s] : preps) out += (out.empty() ? "" : ",") + std::to_string(cut) + ":" + prep_name(s);
    return out;
}

ObservableSpec localize(const ObservableSpec& parent, const Fragment& fragment) {
    ObservableSpec local;
    local.kind = parent.kind;
    for (int l : fragment.output_qubits) {
        const int wire = fragment.parent_qubits.at(l);
        const auto it = std::find(parent.qubits.begin(), parent.qubits.end(), wire);
        if (it == parent.qubits.end()) continue;
        const auto j = static_cast<std::size_t>(it - parent.qubits.begin());
        local.qubits.push_back(l);
        if (parent.kind == ObservableKind::PauliString) local.paulis.push_back(parent.paulis.at(j));
        if (parent.kind == ObservableKind::Projector) local.bits.push_back(parent.bits.at(j));
    }
    return local;
}

namespace {

void check_neglect(const Fragment& f, const NeglectSet& neglected) {
    const auto ids = f.cut_ids();
    for (const auto& [cut, p] : neglected) {
        if (std::find(ids.begin(), ids.end(), cut) == ids.end()) {
            throw CutError(Errc::InvalidArgument, "neglected basis on unknown cut " + std::to_string(cut));
        }
        if (p == Pauli::I) throw CutError(Errc::InvalidArgument, "the identity term cannot be neglected");
    }
    for (int cut : ids) {
        int n = 0;
        for (Pauli p : kMeasuredPaulis) n += static_cast<int>(neglected.count({cut, p}));
        if (n == 3) {
            throw CutError(Errc::AllBasesNeglected, "every non-identity basis neglected at cut " + std::to_string(cut));
        }
    }
}

void append_readout(Circuit& c, const ObservableSpec& local_obs) {
    if (local_obs.kind != ObservableKind::PauliString) return;
    for (std::size_t j = 0; j < local_obs.qubits.size(); ++j) {
        if (local_obs.paulis[j] == Pauli::I) continue;
        for (Gate g : basis_rotation(local_obs.paulis[j], local_obs.qubits[j])) c.add(std::move(g));
    }
}

// Cartesian product of per-cut option lists, first cut varying slowest.
template <class T>
std::vector<std::vector<T>> product(const std::vector<std::vector<T>>& options) {
    std::vector<std::vector<T>> out{{}};
    for (const auto& opts : options) {
        std::vector<std::vector<T>> next;
        for (const auto& prefix : out) {
            for (const T& o : opts) {
                auto v = prefix;
                v.push_back(o);
                next.push_back(std::move(v));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<Variant> upstream_variants(const Fragment& f1, const NeglectSet& neglected, const ObservableSpec& local_obs) {
    if (f1.side != Side::Upstream) throw CutError(Errc::WrongSide, "upstream variants need the upstream fragment");
    check_neglect(f1, neglected);
    local_obs.check(f1.width());

    std::vector<std::vector<Pauli>> options;
    for (const auto& cq : f1.upstream_cuts) {
        std::vector<Pauli> allowed;
        for (Pauli p : kMeasuredPaulis) {
            // Z data also carries the identity term, so it is never dropped.
            if (p == Pauli::Z || !neglected.count({cq.cut_id, p})) allowed.push_back(p);
        }
        options.push_back(std::move(allowed));
    }

    std::vector<Variant> out;
    for (const auto& combo : product(options)) {
        Variant v;
        v.key.side = Side::Upstream;
        Circuit c = f1.circuit;
        for (std::size_t i = 0; i < combo.size(); ++i) {
            const auto& cq = f1.upstream_cuts[i];
            v.key.bases[cq.cut_id] = combo[i];
            for (Gate g : basis_rotation(combo[i], cq.local)) c.add(std::move(g));
        }
        append_readout(c, local_obs);
        v.circuit = std::move(c);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Variant> downstream_variants(const Fragment& f2, const NeglectSet& neglected,
                                         const ObservableSpec& local_obs) {
    if (f2.side != Side::Downstream) {
        throw CutError(Errc::WrongSide, "downstream variants need the downstream fragment");
    }
    check_neglect(f2, neglected);
    local_obs.check(f2.width());

    std::vector<std::vector<PrepState>> options;
    for (const auto& cq : f2.downstream_cuts) {
        std::vector<PrepState> allowed;
        for (PrepState s : kPrepStates) {
            const auto [basis, sign] = basis_of(s);
            (void)sign;
            if (basis == Pauli::Z || !neglected.count({cq.cut_id, basis})) allowed.push_back(s);
        }
        options.push_back(std::move(allowed));
    }

    std::vector<Variant> out;
    for (const auto& combo : product(options)) {
        Variant v;
        v.key.side = Side::Downstream;
        Circuit c(f2.width());
        for (std::size_t i = 0; i < combo.size(); ++i) {
            const auto& cq = f2.downstream_cuts[i];
            v.key.preps[cq.cut_id] = combo[i];
            for (Gate g : prep_gates(combo[i], cq.local)) c.add(std::move(g));
        }
        for (const Gate& g : f2.circuit.gates()) c.add(g);
        append_readout(c, local_obs);
        v.circuit = std::move(c);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<double> VariantResult::weights() const {
    if (exact) return probabilities;
    if (counts.shots == 0) throw CutError(Errc::ShotStarvation, "variant " + key.to_string() + " has zero shots");
    return counts.frequencies();
}

std::uint64_t variant_seed(std::uint64_t seed, const VariantKey& key) noexcept {
    return derive_seed(seed, {key.side == Side::Upstream ? kStreamUpstream : kStreamDownstream, key.code()});
}

FragmentRun run_fragment(const Fragment& fragment, const std::vector<Variant>& variants, const ExecMode& mode) {
    FragmentRun run;
    for (const Variant& v : variants) {
        const StateVector state = simulate(v.circuit);
        VariantResult r;
        r.key = v.key;
        r.exact = mode.exact;
        r.n_bits = fragment.width();
        r.output_bits = fragment.output_qubits;
        for (const auto& cq : fragment.upstream_cuts) r.cut_bits[cq.cut_id] = cq.local;
        if (mode.exact) {
            r.probabilities = exact_distribution(state);
        } else {
            r.counts = sample_distribution(exact_distribution(state), r.n_bits, mode.shots, variant_seed(mode.seed, v.key));
        }
        ++run.executions;
        run.shots += mode.exact ? 0 : mode.shots;
        run.results.push_back(std::move(r));
    }
    std::sort(run.results.begin(), run.results.end(),
              [](const VariantResult& a, const VariantResult& b) { return a.key < b.key; });
    return run;
}

}  // namespace gcut

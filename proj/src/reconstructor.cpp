#include "gcut/reconstructor.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gcut/error.hpp"

namespace gcut {

std::size_t tuple_count(int n_cuts) noexcept { return std::size_t{1} << (2 * n_cuts); }

Pauli tuple_digit(std::size_t tuple, int position, int n_cuts) noexcept {
    return static_cast<Pauli>((tuple >> (2 * (n_cuts - 1 - position))) & 3U);
}

double FragmentTensor::at(std::span<const Pauli> tuple) const {
    if (static_cast<int>(tuple.size()) != n_cuts()) throw CutError(Errc::ArityMismatch, "tuple length");
    std::size_t idx = 0;
    for (Pauli p : tuple) idx = idx * 4 + static_cast<std::size_t>(p);
    return entry(idx)[0];
}

namespace {

bool tuple_neglected(std::size_t tuple, const std::vector<int>& cut_ids, const NeglectSet& neglected) {
    const int k = static_cast<int>(cut_ids.size());
    for (int i = 0; i < k; ++i) {
        if (neglected.count({cut_ids[i], tuple_digit(tuple, i, k)})) return true;
    }
    return false;
}

inline int bit_at(std::size_t index, int pos, int n_bits) { return static_cast<int>((index >> (n_bits - 1 - pos)) & 1U); }

// Evaluates the local observable on one readout. In expectation mode the result
// goes to slot 0; in distribution mode to the slot of the output substring.
struct OutcomeMap {
    const ObservableSpec& obs;
    int n_bits;

    [[nodiscard]] std::size_t slot(std::size_t x) const {
        std::size_t s = 0;
        for (int q : obs.qubits) s = (s << 1) | static_cast<std::size_t>(bit_at(x, q, n_bits));
        return s;
    }
    [[nodiscard]] double value(std::size_t x) const {
        switch (obs.kind) {
            case ObservableKind::PauliString: {
                double v = 1.0;
                for (std::size_t j = 0; j < obs.qubits.size(); ++j) {
                    if (obs.paulis[j] != Pauli::I && bit_at(x, obs.qubits[j], n_bits)) v = -v;
                }
                return v;
            }
            case ObservableKind::Projector:
                for (std::size_t j = 0; j < obs.qubits.size(); ++j) {
                    if (bit_at(x, obs.qubits[j], n_bits) != obs.bits[j]) return 0.0;
                }
                return 1.0;
            case ObservableKind::Distribution: return 1.0;
        }
        return 0.0;
    }
    void accumulate(std::span<double> out, std::size_t x, double weight) const {
        if (obs.kind == ObservableKind::Distribution) {
            out[slot(x)] += weight;
        } else {
            out[0] += weight * value(x);
        }
    }
};

const VariantResult& find_result(const std::map<VariantKey, const VariantResult*>& by_key, const VariantKey& key) {
    const auto it = by_key.find(key);
    if (it == by_key.end()) throw CutError(Errc::MissingVariant, "no result for variant " + key.to_string());
    return *it->second;
}

}  // namespace

FragmentTensor build_tensor(const std::vector<VariantResult>& results, const Fragment& fragment,
                            const ObservableSpec& local_obs, const NeglectSet& neglected) {
    local_obs.check(fragment.width());
    for (int q : local_obs.qubits) {
        if (std::find(fragment.output_qubits.begin(), fragment.output_qubits.end(), q) == fragment.output_qubits.end()) {
            throw CutError(Errc::SupportMismatch, "observable touches a measured cut wire");
        }
    }

    FragmentTensor t;
    t.side = fragment.side;
    t.mode = local_obs.kind == ObservableKind::Distribution ? TensorMode::Distribution : TensorMode::Expectation;
    const auto& cuts = fragment.interface();
    for (const auto& c : cuts) t.cut_ids.push_back(c.cut_id);
    const int k = t.n_cuts();
    if (k > kMaxTensorCuts) throw CutError(Errc::InvalidArgument, "too many cuts for a dense tensor");
    if (t.mode == TensorMode::Distribution) {
        for (int q : local_obs.qubits) t.out_wires.push_back(fragment.parent_qubits.at(q));
    }

    std::map<VariantKey, const VariantResult*> by_key;
    for (const auto& r : results) by_key[r.key] = &r;

    const std::size_t n_tuples = tuple_count(k);
    const std::size_t w = t.width();
    t.values.assign(n_tuples * w, 0.0);
    t.present.assign(n_tuples, false);
    const OutcomeMap outcome{local_obs, fragment.width()};

    std::map<const VariantResult*, std::vector<double>> weight_cache;
    auto weights_of = [&](const VariantResult& r) -> const std::vector<double>& {
        auto it = weight_cache.find(&r);
        if (it == weight_cache.end()) {
            it = weight_cache.emplace(&r, r.weights()).first;
            t.shots += r.samples();
        }
        return it->second;
    };

    for (std::size_t m = 0; m < n_tuples; ++m) {
        if (tuple_neglected(m, t.cut_ids, neglected)) continue;
        t.present[m] = true;
        std::span<double> out(t.values.data() + m * w, w);

        if (t.side == Side::Upstream) {
            VariantKey key;
            key.side = Side::Upstream;
            for (int i = 0; i < k; ++i) {
                const Pauli p = tuple_digit(m, i, k);
                key.bases[t.cut_ids[i]] = p == Pauli::I ? Pauli::Z : p;
            }
            const VariantResult& r = find_result(by_key, key);
            const auto& p = weights_of(r);
            for (std::size_t x = 0; x < p.size(); ++x) {
                if (p[x] == 0.0) continue;
                double sign = 1.0;
                for (int i = 0; i < k; ++i) {
                    if (tuple_digit(m, i, k) != Pauli::I && bit_at(x, cuts[i].local, r.n_bits)) sign = -sign;
                }
                outcome.accumulate(out, x, sign * p[x]);
            }
        } else {
            // Sum over eigenvalue signs s; identity entries weight both eigenstates by +1.
            for (std::size_t signs = 0; signs < (std::size_t{1} << k); ++signs) {
                VariantKey key;
                key.side = Side::Downstream;
                double weight = 1.0;
                for (int i = 0; i < k; ++i) {
                    const Pauli p = tuple_digit(m, i, k);
                    const int s = ((signs >> (k - 1 - i)) & 1U) ? -1 : 1;
                    key.preps[t.cut_ids[i]] = prep_for(p, s);
                    if (p != Pauli::I) weight *= s;
                }
                const VariantResult& r = find_result(by_key, key);
                const auto& p = weights_of(r);
                for (std::size_t x = 0; x < p.size(); ++x) {
                    if (p[x] != 0.0) outcome.accumulate(out, x, weight * p[x]);
                }
            }
        }
    }
    return t;
}

namespace {

void check_pair(const FragmentTensor& a, const FragmentTensor& b) {
    if (a.side != Side::Upstream || b.side != Side::Downstream) {
        throw CutError(Errc::WrongSide, "contract expects (upstream, downstream) tensors");
    }
    if (a.cut_ids != b.cut_ids) throw CutError(Errc::ArityMismatch, "fragment tensors disagree on cuts");
    if (a.mode != b.mode) throw CutError(Errc::ArityMismatch, "fragment tensors disagree on mode");
}

bool allowed(const FragmentTensor& a, const FragmentTensor& b, std::size_t m, const NeglectSet& neglected) {
    return a.present[m] && b.present[m] && !tuple_neglected(m, a.cut_ids, neglected);
}

}  // namespace

Reconstruction contract_expectation(const FragmentTensor& a, const FragmentTensor& b, const NeglectSet& neglected) {
    check_pair(a, b);
    if (a.mode != TensorMode::Expectation) throw CutError(Errc::InvalidArgument, "tensors are in distribution mode");
    Reconstruction rec;
    rec.mode = TensorMode::Expectation;
    rec.neglected = neglected;
    rec.shots_used = a.shots + b.shots;
    double acc = 0.0;
    for (std::size_t m = 0; m < tuple_count(a.n_cuts()); ++m) {
        if (!allowed(a, b, m, neglected)) continue;
        acc += a.entry(m)[0] * b.entry(m)[0];
        ++rec.terms_evaluated;
    }
    rec.value = std::ldexp(acc, -a.n_cuts());
    return rec;
}

Reconstruction contract_distribution(const FragmentTensor& a, const FragmentTensor& b, const NeglectSet& neglected) {
    check_pair(a, b);
    if (a.mode != TensorMode::Distribution) throw CutError(Errc::InvalidArgument, "tensors are in expectation mode");
    Reconstruction rec;
    rec.mode = TensorMode::Distribution;
    rec.neglected = neglected;
    rec.shots_used = a.shots + b.shots;

    rec.wires = a.out_wires;
    rec.wires.insert(rec.wires.end(), b.out_wires.begin(), b.out_wires.end());
    std::sort(rec.wires.begin(), rec.wires.end());
    const int n = static_cast<int>(rec.wires.size());

    // Where each fragment's output bits land in the parent index.
    auto spread = [&](const std::vector<int>& wires) {
        const std::size_t size = std::size_t{1} << wires.size();
        std::vector<std::size_t> out(size, 0);
        for (std::size_t local = 0; local < size; ++local) {
            for (std::size_t j = 0; j < wires.size(); ++j) {
                if (!((local >> (wires.size() - 1 - j)) & 1U)) continue;
                const auto pos = std::find(rec.wires.begin(), rec.wires.end(), wires[j]) - rec.wires.begin();
                out[local] |= std::size_t{1} << (n - 1 - pos);
            }
        }
        return out;
    };
    const auto spread_a = spread(a.out_wires);
    const auto spread_b = spread(b.out_wires);

    rec.raw.assign(std::size_t{1} << n, 0.0);
    const double scale = std::ldexp(1.0, -a.n_cuts());
    for (std::size_t m = 0; m < tuple_count(a.n_cuts()); ++m) {
        if (!allowed(a, b, m, neglected)) continue;
        ++rec.terms_evaluated;
        const auto ea = a.entry(m);
        const auto eb = b.entry(m);
        for (std::size_t i = 0; i < ea.size(); ++i) {
            if (ea[i] == 0.0) continue;
            for (std::size_t j = 0; j < eb.size(); ++j) rec.raw[spread_a[i] | spread_b[j]] += scale * ea[i] * eb[j];
        }
    }

    rec.distribution = rec.raw;
    double total = 0.0;
    for (double& p : rec.distribution) {
        p = std::max(p, 0.0);
        total += p;
    }
    if (total > 0.0) {
        for (double& p : rec.distribution) p /= total;
    }
    return rec;
}

TermCount term_count(int regular_cuts, int golden_cuts) {
    if (regular_cuts < 0 || golden_cuts < 0) throw CutError(Errc::InvalidArgument, "negative cut count");
    std::uint64_t tuples = 1;
    for (int i = 0; i < regular_cuts; ++i) tuples *= 4;
    for (int i = 0; i < golden_cuts; ++i) tuples *= 3;
    const int k = regular_cuts + golden_cuts;
    return {tuples, tuples << (2 * k)};
}

CutRun run_cut(const Bipartition& parts, const ObservableSpec& parent_obs, const NeglectSet& neglected,
               const ExecMode& mode) {
    parent_obs.check(parts.parent_width);
    const ObservableSpec obs_a = localize(parent_obs, parts.upstream);
    const ObservableSpec obs_b = localize(parent_obs, parts.downstream);
    CutRun run;
    run.upstream = run_fragment(parts.upstream, upstream_variants(parts.upstream, neglected, obs_a), mode);
    run.downstream = run_fragment(parts.downstream, downstream_variants(parts.downstream, neglected, obs_b), mode);
    run.a = build_tensor(run.upstream.results, parts.upstream, obs_a, neglected);
    run.b = build_tensor(run.downstream.results, parts.downstream, obs_b, neglected);
    run.result = parent_obs.kind == ObservableKind::Distribution ? contract_distribution(run.a, run.b, neglected)
                                                                 : contract_expectation(run.a, run.b, neglected);
    return run;
}

}  // namespace gcut

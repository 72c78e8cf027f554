#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gcut/bipartition.hpp"
#include "gcut/simulator.hpp"

namespace gcut {

/// (cut_id, basis) pairs whose terms are dropped from reconstruction.
using NeglectSet = std::set<std::pair<int, Pauli>>;

std::string neglect_to_string(const NeglectSet& neglected);
/// Parses "1:Y,2:X".
NeglectSet parse_neglect(const std::string& text);

/// Measurement basis per cut (upstream) or preparation per cut (downstream).
struct VariantKey {
    Side side = Side::Upstream;
    std::map<int, Pauli> bases;
    std::map<int, PrepState> preps;

    bool operator==(const VariantKey&) const = default;
    auto operator<=>(const VariantKey&) const = default;

    /// Order-independent code used to derive the variant's RNG stream.
    [[nodiscard]] std::uint64_t code() const noexcept;
    [[nodiscard]] std::string to_string() const;
};

struct Variant {
    VariantKey key;
    Circuit circuit;
};

/// Fragment-local view of a parent observable: the factor acting on the wires
/// this fragment reads out, re-indexed to local qubits.
ObservableSpec localize(const ObservableSpec& parent, const Fragment& fragment);

/// One measurement setting per combination of allowed bases, rotating each cut
/// wire into its basis. Pauli factors of `local_obs` are rotated into Z as well.
std::vector<Variant> upstream_variants(const Fragment& f1, const NeglectSet& neglected,
                                       const ObservableSpec& local_obs = {});

/// One circuit per combination of allowed preparations. |0> and |1> are always
/// kept since the identity term reuses them.
std::vector<Variant> downstream_variants(const Fragment& f2, const NeglectSet& neglected,
                                         const ObservableSpec& local_obs = {});

struct ExecMode {
    bool exact = true;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    static ExecMode exact_mode() { return {}; }
    static ExecMode with_shots(std::uint64_t shots, std::uint64_t seed) { return {false, shots, seed}; }
};

struct VariantResult {
    VariantKey key;
    bool exact = true;
    int n_bits = 0;                     // every local qubit is read out
    std::vector<double> probabilities;  // exact mode
    Counts counts;                      // shot mode
    std::map<int, int> cut_bits;        // cut_id -> bit position of the measured cut wire
    std::vector<int> output_bits;

    /// Outcome weights that sum to one, whichever mode produced them.
    [[nodiscard]] std::vector<double> weights() const;
    [[nodiscard]] std::uint64_t samples() const noexcept { return exact ? 0 : counts.shots; }
};

struct FragmentRun {
    std::vector<VariantResult> results;  // sorted by key
    std::uint64_t executions = 0;        // variants executed
    std::uint64_t shots = 0;             // total shots spent
};

std::uint64_t variant_seed(std::uint64_t seed, const VariantKey& key) noexcept;

FragmentRun run_fragment(const Fragment& fragment, const std::vector<Variant>& variants, const ExecMode& mode);

}  // namespace gcut

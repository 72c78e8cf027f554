#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcut/reconstructor.hpp"

namespace gcut {

inline constexpr double kDefaultAlpha = 0.05;
inline constexpr double kDefaultTau = 0.02;
inline constexpr double kGenerationEps = 1e-8;
inline constexpr double kOracleEps = 1e-12;

struct GoldenEntry {
    int cut_id = 0;
    Pauli basis = Pauli::Z;
    double magnitude = 0.0;  // max |signed sum| over other cuts' tuples (and output bitstrings)
    bool golden = false;
    std::optional<double> radius;        // statistical mode
    std::optional<std::uint64_t> shots;  // statistical mode
    std::string note;
};

struct GoldenReport {
    std::vector<GoldenEntry> entries;  // sorted by (cut_id, basis)

    [[nodiscard]] NeglectSet golden_set() const;
    [[nodiscard]] const GoldenEntry& find(int cut_id, Pauli basis) const;
    [[nodiscard]] bool is_golden(int cut_id, Pauli basis) const { return find(cut_id, basis).golden; }
};

/// A (cut, basis) pair is golden when every upstream entry with that basis at
/// that cut is within `eps` of zero, whatever the other cuts carry.
GoldenReport detect_exact(const FragmentTensor& upstream, double eps = kOracleEps);

/// Two-sided Hoeffding radius at confidence 1 - alpha for the mean of n
/// per-shot contributions bounded in [-1, 1].
double hoeffding_radius(std::uint64_t n, double alpha);

/// Shot-data detector: a pair is flagged when, for every entry it governs, the
/// Hoeffding interval contains zero and lies inside [-tau, tau]. If the radius
/// alone exceeds tau the pair is left unflagged with an "insufficient data" note.
GoldenReport detect_statistical(const std::vector<VariantResult>& upstream_results, const Fragment& upstream,
                                const ObservableSpec& local_obs, double alpha = kDefaultAlpha,
                                double tau = kDefaultTau);

}  // namespace gcut

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcut/fragmenter.hpp"

namespace gcut {

struct WeightedDistance {
    double distance = 0.0;
    double mass_outside_support = 0.0;  // p-mass on outcomes with q(x) == 0
};

/// sum over {x : q(x) > 0} of (p(x) - q(x))^2 / q(x), with q the reference.
WeightedDistance weighted_distance(std::span<const double> p, std::span<const double> q);

/// Execution and contraction counters for one cut run.
struct Ledger {
    std::uint64_t upstream_variants = 0;
    std::uint64_t downstream_variants = 0;
    std::uint64_t shots_total = 0;
    std::uint64_t basis_tuples = 0;

    [[nodiscard]] std::uint64_t variants() const noexcept { return upstream_variants + downstream_variants; }
    bool operator==(const Ledger&) const = default;
};

/// Counters a run over `cut_ids` with this neglect set would produce, at
/// `shots_per_variant` shots per executed variant.
Ledger planned_ledger(const std::vector<int>& cut_ids, const NeglectSet& neglected, std::uint64_t shots_per_variant);

struct CostReport {
    Ledger pruned;
    Ledger baseline;
    double variant_savings = 0.0;    // 1 - pruned / baseline
    double downstream_savings = 0.0;
    double shot_savings = 0.0;
    double tuple_savings = 0.0;
};

CostReport cost_report(const Ledger& pruned, const Ledger& baseline);

}  // namespace gcut

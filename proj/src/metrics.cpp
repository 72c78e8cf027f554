#include "gcut/metrics.hpp"

#include <cmath>

#include "gcut/error.hpp"

namespace gcut {

WeightedDistance weighted_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw CutError(Errc::SupportMismatch, "distributions over different outcome sets");
    double sum_p = 0.0, sum_q = 0.0;
    for (double v : p) sum_p += v;
    for (double v : q) sum_q += v;
    if (std::abs(sum_p - 1.0) > 1e-9 || std::abs(sum_q - 1.0) > 1e-9) {
        throw CutError(Errc::InvalidArgument, "distributions must sum to one");
    }
    WeightedDistance d;
    bool any = false;
    for (std::size_t x = 0; x < q.size(); ++x) {
        if (q[x] > 0.0) {
            any = true;
            const double diff = p[x] - q[x];
            d.distance += diff * diff / q[x];
        } else {
            d.mass_outside_support += p[x];
        }
    }
    if (!any) throw CutError(Errc::EmptySupport, "reference distribution has no support");
    return d;
}

Ledger planned_ledger(const std::vector<int>& cut_ids, const NeglectSet& neglected, std::uint64_t shots_per_variant) {
    Ledger l{1, 1, 0, 1};
    for (int cut : cut_ids) {
        std::uint64_t dropped = 0;
        for (Pauli p : {Pauli::X, Pauli::Y}) dropped += neglected.count({cut, p});
        const std::uint64_t tuples_dropped = dropped + neglected.count({cut, Pauli::Z});
        l.upstream_variants *= 3 - dropped;
        l.downstream_variants *= 6 - 2 * dropped;
        l.basis_tuples *= 4 - tuples_dropped;
    }
    l.shots_total = l.variants() * shots_per_variant;
    return l;
}

namespace {

double savings(std::uint64_t pruned, std::uint64_t baseline) {
    if (baseline == 0) return 0.0;
    return 1.0 - static_cast<double>(pruned) / static_cast<double>(baseline);
}

}  // namespace

CostReport cost_report(const Ledger& pruned, const Ledger& baseline) {
    CostReport r;
    r.pruned = pruned;
    r.baseline = baseline;
    r.variant_savings = savings(pruned.variants(), baseline.variants());
    r.downstream_savings = savings(pruned.downstream_variants, baseline.downstream_variants);
    r.shot_savings = savings(pruned.shots_total, baseline.shots_total);
    r.tuple_savings = savings(pruned.basis_tuples, baseline.basis_tuples);
    return r;
}

}  // namespace gcut

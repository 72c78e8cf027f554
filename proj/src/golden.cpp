#include "gcut/golden.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gcut/error.hpp"

namespace gcut {

NeglectSet GoldenReport::golden_set() const {
    NeglectSet out;
    for (const auto& e : entries) {
        if (e.golden) out.insert({e.cut_id, e.basis});
    }
    return out;
}

const GoldenEntry& GoldenReport::find(int cut_id, Pauli basis) const {
    for (const auto& e : entries) {
        if (e.cut_id == cut_id && e.basis == basis) return e;
    }
    throw CutError(Errc::InvalidArgument, "no report entry for cut " + std::to_string(cut_id));
}

namespace {

// Largest |entry| over tuples with `basis` at cut position `pos`; nullopt if none present.
std::optional<double> max_magnitude(const FragmentTensor& t, int pos, Pauli basis) {
    std::optional<double> best;
    for (std::size_t m = 0; m < tuple_count(t.n_cuts()); ++m) {
        if (!t.present[m] || tuple_digit(m, pos, t.n_cuts()) != basis) continue;
        double mag = 0.0;
        for (double v : t.entry(m)) mag = std::max(mag, std::abs(v));
        best = std::max(best.value_or(0.0), mag);
    }
    return best;
}

}  // namespace

GoldenReport detect_exact(const FragmentTensor& upstream, double eps) {
    if (upstream.side != Side::Upstream) throw CutError(Errc::WrongSide, "golden detection reads the upstream tensor");
    GoldenReport report;
    for (int pos = 0; pos < upstream.n_cuts(); ++pos) {
        for (Pauli p : kMeasuredPaulis) {
            GoldenEntry e;
            e.cut_id = upstream.cut_ids[pos];
            e.basis = p;
            if (const auto mag = max_magnitude(upstream, pos, p)) {
                e.magnitude = *mag;
                e.golden = *mag <= eps;
            } else {
                e.note = "no data";
            }
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

double hoeffding_radius(std::uint64_t n, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw CutError(Errc::InvalidArgument, "alpha must lie in (0, 1)");
    if (n == 0) return std::numeric_limits<double>::infinity();
    // P(|mean - mu| >= t) <= 2 exp(-2 n t^2 / (b - a)^2) with b - a = 2.
    return std::sqrt(2.0 * std::log(2.0 / alpha) / static_cast<double>(n));
}

GoldenReport detect_statistical(const std::vector<VariantResult>& upstream_results, const Fragment& upstream,
                                const ObservableSpec& local_obs, double alpha, double tau) {
    if (upstream.side != Side::Upstream) throw CutError(Errc::WrongSide, "golden detection reads the upstream fragment");
    if (!(alpha > 0.0 && alpha < 1.0)) throw CutError(Errc::InvalidArgument, "alpha must lie in (0, 1)");
    for (const auto& r : upstream_results) {
        if (r.exact) throw CutError(Errc::InvalidArgument, "statistical detection needs shot data");
    }
    // Shot-mode tensor entries are exactly the empirical means of the per-shot
    // signed contributions, each bounded in [-1, 1].
    const FragmentTensor t = build_tensor(upstream_results, upstream, local_obs);

    GoldenReport report;
    for (int pos = 0; pos < t.n_cuts(); ++pos) {
        const int cut = t.cut_ids[pos];
        for (Pauli p : kMeasuredPaulis) {
            GoldenEntry e;
            e.cut_id = cut;
            e.basis = p;
            std::uint64_t n = std::numeric_limits<std::uint64_t>::max();
            for (const auto& r : upstream_results) {
                const auto it = r.key.bases.find(cut);
                if (it != r.key.bases.end() && it->second == p) n = std::min(n, r.counts.shots);
            }
            if (n == std::numeric_limits<std::uint64_t>::max()) n = 0;
            const double radius = hoeffding_radius(n, alpha);
            e.radius = radius;
            e.shots = n;
            e.magnitude = max_magnitude(t, pos, p).value_or(0.0);
            if (radius > tau) {
                e.note = "insufficient data";
            } else {
                e.golden = e.magnitude <= radius && e.magnitude + radius <= tau;
            }
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

}  // namespace gcut

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gcut/golden.hpp"
#include "gcut/metrics.hpp"
#include "gcut/reconstructor.hpp"

namespace gcut {

using ordered_json = nlohmann::ordered_json;

/// {"shots": n, "counts": {"bitstring": count}} with zero counts omitted.
ordered_json counts_to_json(const Counts& counts);
Counts counts_from_json(const ordered_json& j, int n_bits);

/// [{"key": {...}, "mode": "exact"|"shots", "data": ..., "cut_bits": {...}}],
/// keys canonicalized by ascending cut_id.
ordered_json variant_results_to_json(const std::vector<VariantResult>& results);

ordered_json reconstruction_to_json(const Reconstruction& rec);
ordered_json golden_report_to_json(const GoldenReport& report);
ordered_json ledger_to_json(const Ledger& ledger);
ordered_json cost_report_to_json(const CostReport& report);

}  // namespace gcut

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcut/golden.hpp"
#include "gcut/metrics.hpp"

namespace gcut {

enum class PruneMode { Off, Known, Exact, Statistical };

PruneMode parse_prune_mode(const std::string& text);
std::string prune_mode_name(PruneMode mode);

enum class OutputFormat { Csv, Json };

struct GenerateConfig {
    int qubits = 5;
    int depth = 2;
    std::uint64_t seed = 0;
};

struct GenerateResult {
    std::string circuit_json;
    std::string report;  // one "cut k: B golden" line per golden pair
};

GenerateResult cmd_generate(const GenerateConfig& config);

/// Trial t draws its streams from derive_seed(seed, {kStreamTrial, t}); variant
/// and uncut-sampling streams are split from that trial seed.
struct RunConfig {
    int trials = 10;
    std::uint64_t shots = 10000;  // per executed variant, and for the uncut baseline
    std::uint64_t seed = 0;
    PruneMode prune = PruneMode::Off;
    NeglectSet known;             // for PruneMode::Known; detected exactly when empty
    bool exact = false;           // infinite-shot execution
    double alpha = kDefaultAlpha;
    double tau = kDefaultTau;
};

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    int n_qubits = 0;
    int n_cuts = 0;
    int golden_cuts = 0;
    std::uint64_t shots_per_variant = 0;
    double dw_cut = 0.0;
    double dw_uncut = 0.0;
    CostReport cost;
    GoldenReport golden;
    Reconstruction reconstruction;
};

std::vector<TrialRecord> cmd_run(const Circuit& circuit, const RunConfig& config);

std::string records_to_csv(const std::vector<TrialRecord>& records);
std::string records_to_json(const std::vector<TrialRecord>& records);

struct BenchConfig {
    int max_cuts = 2;
    int out_bits = 3;     // per fragment, for the timed distribution contraction
    int repeats = 200;
    bool timing = true;
};

struct BenchRow {
    int n_cuts = 0;
    int golden_cuts = 0;
    TermCount pruned{};
    TermCount baseline{};
    Ledger pruned_ledger;
    Ledger baseline_ledger;
    double contraction_seconds = 0.0;  // machine dependent
};

std::vector<BenchRow> cmd_bench(const BenchConfig& config);
std::string bench_to_csv(const std::vector<BenchRow>& rows, bool timing);
std::string bench_to_json(const std::vector<BenchRow>& rows, bool timing);

struct DetectConfig {
    bool statistical = false;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    double alpha = kDefaultAlpha;
    double tau = kDefaultTau;
    double eps = kOracleEps;
    std::string observable = "dist";
};

GoldenReport cmd_detect(const Circuit& circuit, const DetectConfig& config);

}  // namespace gcut

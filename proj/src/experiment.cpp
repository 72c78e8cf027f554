#include "gcut/experiment.hpp"

#include <chrono>
#include <numeric>
#include <set>

#include "gcut/circuit_io.hpp"
#include "gcut/error.hpp"
#include "gcut/generators.hpp"
#include "gcut/report_io.hpp"
#include "gcut/rng.hpp"

namespace gcut {

PruneMode parse_prune_mode(const std::string& text) {
    if (text == "off") return PruneMode::Off;
    if (text == "known") return PruneMode::Known;
    if (text == "exact") return PruneMode::Exact;
    if (text == "statistical") return PruneMode::Statistical;
    throw CutError(Errc::InvalidArgument, "unknown pruning mode '" + text + "'");
}

std::string prune_mode_name(PruneMode mode) {
    switch (mode) {
        case PruneMode::Off: return "off";
        case PruneMode::Known: return "known";
        case PruneMode::Exact: return "exact";
        case PruneMode::Statistical: return "statistical";
    }
    return "?";
}

namespace {

std::vector<int> all_wires(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

GoldenReport exact_report(const Bipartition& parts, const ObservableSpec& parent_obs, double eps) {
    const ObservableSpec local = localize(parent_obs, parts.upstream);
    const auto run = run_fragment(parts.upstream, upstream_variants(parts.upstream, {}, local), ExecMode::exact_mode());
    return detect_exact(build_tensor(run.results, parts.upstream, local), eps);
}

int cuts_touched(const NeglectSet& neglected) {
    std::set<int> cuts;
    for (const auto& [cut, p] : neglected) cuts.insert(cut);
    return static_cast<int>(cuts.size());
}

}  // namespace

GenerateResult cmd_generate(const GenerateConfig& config) {
    const Circuit c = golden_ansatz(config.qubits, config.depth, config.seed);
    GenerateResult out;
    out.circuit_json = circuit_to_json(c);
    const auto report = exact_report(bipartition(c), ObservableSpec::distribution(all_wires(c.n_qubits())), kGenerationEps);
    for (const auto& e : report.entries) {
        if (e.golden) out.report += "cut " + std::to_string(e.cut_id) + ": " + pauli_char(e.basis) + " golden\n";
    }
    return out;
}

std::vector<TrialRecord> cmd_run(const Circuit& circuit, const RunConfig& config) {
    if (config.trials < 1) throw CutError(Errc::InvalidArgument, "need at least one trial");
    if (!config.exact && config.shots == 0) throw CutError(Errc::InvalidArgument, "shots must be positive");
    const Bipartition parts = bipartition(circuit);
    const int n = circuit.n_qubits();
    const ObservableSpec obs = ObservableSpec::distribution(all_wires(n));
    const StateVector truth_state = simulate(circuit.uncut());
    const std::vector<double> truth = exact_distribution(truth_state);
    const std::vector<int> cut_ids = parts.upstream.cut_ids();
    const std::uint64_t shots = config.exact ? 0 : config.shots;
    const Ledger baseline = planned_ledger(cut_ids, {}, shots);

    GoldenReport oracle_report;
    if (config.prune == PruneMode::Known || config.prune == PruneMode::Exact) {
        oracle_report = exact_report(parts, obs, kOracleEps);
    }

    std::vector<TrialRecord> records;
    for (int t = 0; t < config.trials; ++t) {
        TrialRecord rec;
        rec.trial = t;
        rec.seed = derive_seed(config.seed, {kStreamTrial, static_cast<std::uint64_t>(t)});
        rec.n_qubits = n;
        rec.n_cuts = static_cast<int>(cut_ids.size());
        rec.shots_per_variant = shots;
        const ExecMode mode = config.exact ? ExecMode::exact_mode() : ExecMode::with_shots(config.shots, rec.seed);

        NeglectSet neglected;
        CutRun run;
        switch (config.prune) {
            case PruneMode::Off: run = run_cut(parts, obs, neglected, mode); break;
            case PruneMode::Known:
                neglected = config.known.empty() ? oracle_report.golden_set() : config.known;
                rec.golden = oracle_report;
                run = run_cut(parts, obs, neglected, mode);
                break;
            case PruneMode::Exact:
                neglected = oracle_report.golden_set();
                rec.golden = oracle_report;
                run = run_cut(parts, obs, neglected, mode);
                break;
            case PruneMode::Statistical: {
                // Every upstream setting runs first; its data decides which
                // downstream preparations are skipped.
                const ObservableSpec obs_a = localize(obs, parts.upstream);
                const ObservableSpec obs_b = localize(obs, parts.downstream);
                run.upstream = run_fragment(parts.upstream, upstream_variants(parts.upstream, {}, obs_a), mode);
                rec.golden = config.exact
                                 ? detect_exact(build_tensor(run.upstream.results, parts.upstream, obs_a), kOracleEps)
                                 : detect_statistical(run.upstream.results, parts.upstream, obs_a, config.alpha, config.tau);
                neglected = rec.golden.golden_set();
                run.downstream =
                    run_fragment(parts.downstream, downstream_variants(parts.downstream, neglected, obs_b), mode);
                run.a = build_tensor(run.upstream.results, parts.upstream, obs_a, neglected);
                run.b = build_tensor(run.downstream.results, parts.downstream, obs_b, neglected);
                run.result = contract_distribution(run.a, run.b, neglected);
                break;
            }
        }
        rec.golden_cuts = cuts_touched(neglected);
        rec.dw_cut = weighted_distance(run.result.distribution, truth).distance;
        if (config.exact) {
            rec.dw_uncut = 0.0;
        } else {
            const Counts uncut = sample(truth_state, all_wires(n), config.shots, derive_seed(rec.seed, {kStreamUncut}));
            rec.dw_uncut = weighted_distance(uncut.frequencies(), truth).distance;
        }
        const Ledger pruned{run.upstream.executions, run.downstream.executions,
                            run.upstream.shots + run.downstream.shots, run.result.terms_evaluated};
        rec.cost = cost_report(pruned, baseline);
        rec.reconstruction = std::move(run.result);
        records.push_back(std::move(rec));
    }
    return records;
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
    std::string out =
        "trial,seed,n_qubits,K,K_g,shots_per_variant,d_w_cut,d_w_uncut,variants_pruned,variants_baseline,"
        "tuples_pruned,tuples_baseline\n";
    for (const auto& r : records) {
        out += std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + std::to_string(r.n_qubits) + "," +
               std::to_string(r.n_cuts) + "," + std::to_string(r.golden_cuts) + "," +
               std::to_string(r.shots_per_variant) + "," + format_double(r.dw_cut) + "," + format_double(r.dw_uncut) +
               "," + std::to_string(r.cost.pruned.variants()) + "," + std::to_string(r.cost.baseline.variants()) + "," +
               std::to_string(r.cost.pruned.basis_tuples) + "," + std::to_string(r.cost.baseline.basis_tuples) + "\n";
    }
    return out;
}

std::string records_to_json(const std::vector<TrialRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"trial", r.trial},
                       {"seed", r.seed},
                       {"n_qubits", r.n_qubits},
                       {"K", r.n_cuts},
                       {"K_g", r.golden_cuts},
                       {"shots_per_variant", r.shots_per_variant},
                       {"d_w_cut", r.dw_cut},
                       {"d_w_uncut", r.dw_uncut},
                       {"cost", cost_report_to_json(r.cost)},
                       {"golden", golden_report_to_json(r.golden)},
                       {"reconstruction", reconstruction_to_json(r.reconstruction)}});
    }
    return arr.dump(2) + "\n";
}

std::vector<BenchRow> cmd_bench(const BenchConfig& config) {
    if (config.max_cuts < 1) throw CutError(Errc::NoCuts, "no cuts");
    if (config.max_cuts > kMaxTensorCuts) throw CutError(Errc::InvalidArgument, "too many cuts");
    std::vector<BenchRow> rows;
    for (int k = 1; k <= config.max_cuts; ++k) {
        std::vector<int> ids(k);
        std::iota(ids.begin(), ids.end(), 1);
        for (int kg = 0; kg <= k; ++kg) {
            NeglectSet neglected;
            for (int c = 1; c <= kg; ++c) neglected.insert({c, Pauli::Y});
            BenchRow row;
            row.n_cuts = k;
            row.golden_cuts = kg;
            row.pruned = term_count(k - kg, kg);
            row.baseline = term_count(k, 0);
            row.pruned_ledger = planned_ledger(ids, neglected, 1);
            row.baseline_ledger = planned_ledger(ids, {}, 1);
            if (config.timing) {
                SplitMix64 rng(derive_seed(0, {static_cast<std::uint64_t>(k)}));
                FragmentTensor a, b;
                a.side = Side::Upstream;
                b.side = Side::Downstream;
                a.mode = b.mode = TensorMode::Distribution;
                a.cut_ids = b.cut_ids = ids;
                for (int j = 0; j < config.out_bits; ++j) {
                    a.out_wires.push_back(j);
                    b.out_wires.push_back(config.out_bits + j);
                }
                for (FragmentTensor* t : {&a, &b}) {
                    t->present.assign(tuple_count(k), true);
                    t->values.resize(tuple_count(k) * t->width());
                    for (double& v : t->values) v = rng.uniform(-1.0, 1.0);
                }
                const auto start = std::chrono::steady_clock::now();
                volatile double sink = 0.0;
                for (int r = 0; r < config.repeats; ++r) sink = sink + contract_distribution(a, b, neglected).raw[0];
                const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                row.contraction_seconds = elapsed.count() / std::max(1, config.repeats);
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows, bool timing) {
    std::string out =
        "K,K_g,tuples_pruned,tuples_baseline,eigen_terms_pruned,eigen_terms_baseline,upstream_variants_pruned,"
        "upstream_variants_baseline,downstream_variants_pruned,downstream_variants_baseline";
    out += timing ? ",contraction_seconds_machine_dependent\n" : "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n_cuts) + "," + std::to_string(r.golden_cuts) + "," +
               std::to_string(r.pruned.basis_tuples) + "," + std::to_string(r.baseline.basis_tuples) + "," +
               std::to_string(r.pruned.eigen_terms) + "," + std::to_string(r.baseline.eigen_terms) + "," +
               std::to_string(r.pruned_ledger.upstream_variants) + "," +
               std::to_string(r.baseline_ledger.upstream_variants) + "," +
               std::to_string(r.pruned_ledger.downstream_variants) + "," +
               std::to_string(r.baseline_ledger.downstream_variants);
        out += timing ? "," + format_double(r.contraction_seconds) + "\n" : "\n";
    }
    return out;
}

std::string bench_to_json(const std::vector<BenchRow>& rows, bool timing) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row = {{"K", r.n_cuts},
                            {"K_g", r.golden_cuts},
                            {"tuples_pruned", r.pruned.basis_tuples},
                            {"tuples_baseline", r.baseline.basis_tuples},
                            {"eigen_terms_pruned", r.pruned.eigen_terms},
                            {"eigen_terms_baseline", r.baseline.eigen_terms},
                            {"upstream_variants_pruned", r.pruned_ledger.upstream_variants},
                            {"upstream_variants_baseline", r.baseline_ledger.upstream_variants},
                            {"downstream_variants_pruned", r.pruned_ledger.downstream_variants},
                            {"downstream_variants_baseline", r.baseline_ledger.downstream_variants}};
        if (timing) row["contraction_seconds_machine_dependent"] = r.contraction_seconds;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

GoldenReport cmd_detect(const Circuit& circuit, const DetectConfig& config) {
    const Bipartition parts = bipartition(circuit);
    const ObservableSpec obs = ObservableSpec::parse(config.observable, circuit.n_qubits());
    if (!config.statistical) return exact_report(parts, obs, config.eps);
    if (config.shots == 0) throw CutError(Errc::InvalidArgument, "shots must be positive");
    const ObservableSpec local = localize(obs, parts.upstream);
    const auto run = run_fragment(parts.upstream, upstream_variants(parts.upstream, {}, local),
                                  ExecMode::with_shots(config.shots, config.seed));
    return detect_statistical(run.results, parts.upstream, local, config.alpha, config.tau);
}

}  // namespace gcut

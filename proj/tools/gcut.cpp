// gcut: circuit-cutting experiment harness.
//
//   gcut generate --qubits 5 --depth 2 --seed 7 --out c.json
//   gcut run --circuit c.json --trials 10 --shots 10000 --prune known --format csv
//   gcut bench --cuts 2
//   gcut detect --circuit c.json [--statistical]

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gcut/circuit_io.hpp"
#include "gcut/error.hpp"
#include "gcut/experiment.hpp"
#include "gcut/fragmenter.hpp"
#include "gcut/report_io.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;

int exit_code_for(gcut::Errc code) {
    switch (code) {
        case gcut::Errc::InvalidCircuit:
        case gcut::Errc::NoCuts:
        case gcut::Errc::NotBipartite:
        case gcut::Errc::CyclicCut:
        case gcut::Errc::TooWide:
        case gcut::Errc::SupportMismatch:
            return kExitValidation;
        default:
            return kExitConfig;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gcut::CutError(gcut::Errc::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gcut::CutError(gcut::Errc::InvalidArgument, "cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartite circuit cutting with golden-basis pruning"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
    std::string prune = "off";
    std::uint64_t shots = 10000;
    int trials = 10;
    app.add_option("--seed", seed, "Root seed");
    app.add_option("--out", out_path, "Output file (stdout when omitted)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--prune", prune, "Pruning mode")->check(CLI::IsMember({"off", "known", "exact", "statistical"}));
    app.add_option("--shots", shots, "Shots per executed variant");
    app.add_option("--trials", trials, "Number of trials");

    gcut::GenerateConfig gen;
    auto* generate = app.add_subcommand("generate", "Emit a certified golden-ansatz circuit");
    generate->add_option("--qubits", gen.qubits, "Odd circuit width (3-9)");
    generate->add_option("--depth", gen.depth, "Layers per block");

    std::string circuit_path;
    std::string golden_list;
    bool exact = false;
    double alpha = gcut::kDefaultAlpha, tau = gcut::kDefaultTau;
    auto* run = app.add_subcommand("run", "Cut pipeline trials against the exact uncut distribution");
    run->add_option("--circuit", circuit_path, "Circuit JSON")->required();
    run->add_option("--golden", golden_list, "Known golden pairs, e.g. 1:Y (prune=known)");
    run->add_flag("--exact", exact, "Infinite-shot execution");
    run->add_option("--alpha", alpha, "Detector confidence level");
    run->add_option("--tau", tau, "Detector tolerance");

    gcut::BenchConfig bench_cfg;
    bool no_timing = false;
    auto* bench = app.add_subcommand("bench", "Term and variant counts per (K, K_g)");
    bench->add_option("--cuts", bench_cfg.max_cuts, "Largest K to sweep");
    bench->add_option("--repeats", bench_cfg.repeats, "Timed contractions per row");
    bench->add_flag("--no-timing", no_timing, "Omit the machine-dependent timing column");

    gcut::DetectConfig det;
    bool statistical = false;
    auto* detect = app.add_subcommand("detect", "Golden cutting point report");
    detect->add_option("--circuit", circuit_path, "Circuit JSON")->required();
    detect->add_flag("--statistical", statistical, "Use shot data and Hoeffding intervals");
    detect->add_option("--alpha", det.alpha, "Detector confidence level");
    detect->add_option("--tau", det.tau, "Detector tolerance");
    detect->add_option("--eps", det.eps, "Exact-detection tolerance");
    detect->add_option("--observable", det.observable, "dist | Pauli string | p:<bits>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*generate) {
            gen.seed = seed;
            const auto result = gcut::cmd_generate(gen);
            emit(result.circuit_json, out_path);
            (out_path.empty() ? std::cerr : std::cout) << result.report;
        } else if (*run) {
            gcut::RunConfig cfg;
            cfg.trials = trials;
            cfg.shots = shots;
            cfg.seed = seed;
            cfg.prune = gcut::parse_prune_mode(prune);
            cfg.known = gcut::parse_neglect(golden_list);
            cfg.exact = exact;
            cfg.alpha = alpha;
            cfg.tau = tau;
            const auto circuit = gcut::circuit_from_json(read_file(circuit_path));
            const auto records = gcut::cmd_run(circuit, cfg);
            emit(format == "json" ? gcut::records_to_json(records) : gcut::records_to_csv(records), out_path);
        } else if (*bench) {
            bench_cfg.timing = !no_timing;
            const auto rows = gcut::cmd_bench(bench_cfg);
            emit(format == "json" ? gcut::bench_to_json(rows, bench_cfg.timing) : gcut::bench_to_csv(rows, bench_cfg.timing),
                 out_path);
        } else if (*detect) {
            det.statistical = statistical;
            det.shots = shots;
            det.seed = seed;
            const auto circuit = gcut::circuit_from_json(read_file(circuit_path));
            const auto report = gcut::cmd_detect(circuit, det);
            emit(gcut::golden_report_to_json(report).dump(2) + "\n", out_path);
        }
    } catch (const gcut::CutError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return *bench ? kExitConfig : exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}

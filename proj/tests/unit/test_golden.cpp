#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numeric>

#include "gcut/error.hpp"
#include "gcut/generators.hpp"
#include "gcut/golden.hpp"

using namespace gcut;

namespace {

Circuit bell_fig1(bool plus_readout) {
    Circuit c(3);
    c.add(Gate::h(0)).add(Gate::cnot(0, 1)).cut_here(1, 1);
    if (plus_readout) c.add(Gate::h(0));
    c.add(Gate::ry(1, 0.9)).add(Gate::cnot(1, 2));
    return c;
}

struct Upstream {
    Bipartition parts;
    ObservableSpec local;
    std::vector<VariantResult> results(const ExecMode& mode) const {
        return run_fragment(parts.upstream, upstream_variants(parts.upstream, {}, local), mode).results;
    }
    FragmentTensor exact() const { return build_tensor(results(ExecMode::exact_mode()), parts.upstream, local); }
};

Upstream upstream_of(const Circuit& c, const ObservableSpec& parent) {
    Upstream u{bipartition(c), {}};
    u.local = localize(parent, u.parts.upstream);
    return u;
}

Fragment lone_cut() {
    Fragment f;
    f.side = Side::Upstream;
    f.circuit = Circuit(1);
    f.parent_qubits = {0};
    f.upstream_cuts = {{1, 0}};
    return f;
}

// One variant per basis whose signed cut bit has mean mu[basis].
std::vector<VariantResult> synthetic(const std::array<double, 3>& mu, std::uint64_t shots, std::uint64_t seed) {
    std::vector<VariantResult> out;
    for (Pauli p : kMeasuredPaulis) {
        const double m = mu[static_cast<int>(p) - 1];
        const std::vector<double> probs{(1.0 + m) / 2, (1.0 - m) / 2};
        VariantResult r;
        r.key.side = Side::Upstream;
        r.key.bases[1] = p;
        r.exact = false;
        r.n_bits = 1;
        r.cut_bits[1] = 0;
        r.counts = sample_distribution(probs, 1, shots, seed * 3 + static_cast<int>(p));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

TEST(DetectExact, BellOrthogonalObservable) {
    const auto u = upstream_of(bell_fig1(false), ObservableSpec::pauli_string({0}, {Pauli::X}));
    const auto report = detect_exact(u.exact(), kOracleEps);
    EXPECT_TRUE(report.is_golden(1, Pauli::Z));
    EXPECT_FALSE(report.is_golden(1, Pauli::X));
    EXPECT_NEAR(report.find(1, Pauli::X).magnitude, 1.0, 1e-12);
    EXPECT_EQ(report.entries.size(), 3U);
}

TEST(DetectExact, BellPlusProjector) {
    const auto u = upstream_of(bell_fig1(true), ObservableSpec::projector({0}, {0}));
    EXPECT_TRUE(detect_exact(u.exact(), kOracleEps).is_golden(1, Pauli::Z));
}

TEST(DetectExact, GoldenAnsatzDistribution) {
    std::vector<int> all(5);
    std::iota(all.begin(), all.end(), 0);
    const auto u = upstream_of(golden_ansatz(5, 2, 7), ObservableSpec::distribution(all));
    const auto report = detect_exact(u.exact(), kOracleEps);
    EXPECT_TRUE(report.is_golden(1, Pauli::Y));
    EXPECT_FALSE(report.is_golden(1, Pauli::Z));
    EXPECT_EQ(report.golden_set(), (NeglectSet{{1, Pauli::Y}}));
}

TEST(DetectExact, WrongSide) {
    const auto parts = bipartition(bell_fig1(false));
    const auto local = localize(ObservableSpec::pauli_string({2}, {Pauli::Z}), parts.downstream);
    const auto run = run_fragment(parts.downstream, downstream_variants(parts.downstream, {}, local), ExecMode::exact_mode());
    const auto b = build_tensor(run.results, parts.downstream, local);
    try {
        detect_exact(b);
        FAIL();
    } catch (const CutError& e) {
        EXPECT_EQ(e.code(), Errc::WrongSide);
    }
}

TEST(DetectExact, PruningFlaggedBasesIsExact) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int k = 1 + static_cast<int>(seed % 2);
        const Circuit c = random_cut_circuit(4 + static_cast<int>(seed % 3), k, 1, seed + 70);
        const auto parts = bipartition(c);
        std::vector<int> all(c.n_qubits());
        std::iota(all.begin(), all.end(), 0);
        const auto obs = ObservableSpec::distribution(all);
        const auto full = run_cut(parts, obs, {}, ExecMode::exact_mode());
        NeglectSet golden;
        for (const auto& e : detect_exact(full.a, kOracleEps).entries) {
            if (e.golden && e.basis != Pauli::Z) golden.insert({e.cut_id, e.basis});
        }
        const auto pruned = run_cut(parts, obs, golden, ExecMode::exact_mode());
        for (std::size_t i = 0; i < full.result.raw.size(); ++i) {
            EXPECT_NEAR(full.result.raw[i], pruned.result.raw[i], 1e-10);
        }
    }
}

TEST(Hoeffding, Radius) {
    EXPECT_NEAR(hoeffding_radius(10000, 0.05), std::sqrt(2.0 * std::log(40.0) / 10000.0), 1e-15);
    EXPECT_NEAR(hoeffding_radius(10000, 0.05), 0.027162, 1e-6);
    EXPECT_TRUE(std::isinf(hoeffding_radius(0, 0.05)));
    EXPECT_THROW(hoeffding_radius(10, 0.0), CutError);
    EXPECT_THROW(hoeffding_radius(10, 1.0), CutError);
}

TEST(Hoeffding, Monotone) {
    double prev = hoeffding_radius(1, 0.05);
    for (std::uint64_t n = 2; n < 100000; n = n * 3 / 2 + 1) {
        const double r = hoeffding_radius(n, 0.05);
        EXPECT_LE(r, prev);
        prev = r;
    }
}

TEST(DetectStatistical, BellOrthogonalFlagsZ) {
    const auto u = upstream_of(bell_fig1(false), ObservableSpec::pauli_string({0}, {Pauli::X}));
    for (std::uint64_t seed : {1U, 3U, 4U, 5U}) {
        const auto report =
            detect_statistical(u.results(ExecMode::with_shots(10000, seed)), u.parts.upstream, u.local, 0.05, 0.05);
        const auto& z = report.find(1, Pauli::Z);
        EXPECT_TRUE(z.golden) << "seed " << seed << " magnitude " << z.magnitude;
        EXPECT_EQ(z.shots, 10000U);
        EXPECT_NEAR(*z.radius, hoeffding_radius(10000, 0.05), 1e-15);
        EXPECT_FALSE(report.is_golden(1, Pauli::X));
        EXPECT_NEAR(report.find(1, Pauli::X).magnitude, 1.0, 1e-12);
    }
}

TEST(DetectStatistical, TooFewShots) {
    const auto u = upstream_of(bell_fig1(false), ObservableSpec::pauli_string({0}, {Pauli::X}));
    const auto report = detect_statistical(u.results(ExecMode::with_shots(10, 1)), u.parts.upstream, u.local, 0.05, 0.05);
    for (const auto& e : report.entries) {
        EXPECT_FALSE(e.golden);
        EXPECT_EQ(e.note, "insufficient data");
    }
}

TEST(DetectStatistical, RejectsExactData) {
    const auto u = upstream_of(bell_fig1(false), ObservableSpec::pauli_string({0}, {Pauli::X}));
    EXPECT_THROW(detect_statistical(u.results(ExecMode::exact_mode()), u.parts.upstream, u.local), CutError);
}

TEST(DetectStatistical, SyntheticStreams) {
    const Fragment f = lone_cut();
    const auto obs = ObservableSpec::pauli_string({}, {});
    const auto report = detect_statistical(synthetic({0.0, 0.5, 0.1}, 40000, 9), f, obs, 0.05, 0.05);
    EXPECT_TRUE(report.is_golden(1, Pauli::X));
    EXPECT_FALSE(report.is_golden(1, Pauli::Y));
    EXPECT_FALSE(report.is_golden(1, Pauli::Z));
}

TEST(DetectStatistical, NeverFlagsBeyondRadius) {
    const Fragment f = lone_cut();
    const auto obs = ObservableSpec::pauli_string({}, {});
    const double tau = 0.05;
    const double r = hoeffding_radius(20000, 0.05);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const double mu = tau + r + 0.001;
        const auto report = detect_statistical(synthetic({mu, -mu, 2 * tau}, 20000, seed), f, obs, 0.05, tau);
        EXPECT_TRUE(report.golden_set().empty()) << seed;
    }
}

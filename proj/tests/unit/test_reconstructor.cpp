#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "gcut/error.hpp"
#include "gcut/generators.hpp"
#include "gcut/reconstructor.hpp"
#include "support/oracle.hpp"

using namespace gcut;

namespace {

Fragment bare(Side side, int width, std::vector<int> outputs) {
    Fragment f;
    f.side = side;
    f.circuit = Circuit(width);
    for (int q = 0; q < width; ++q) f.parent_qubits.push_back(q);
    (side == Side::Upstream ? f.upstream_cuts : f.downstream_cuts).push_back({1, 0});
    f.output_qubits = std::move(outputs);
    return f;
}

FragmentTensor exact_tensor(const Fragment& f, const ObservableSpec& local, const NeglectSet& neglected = {}) {
    const auto vs = f.side == Side::Upstream ? upstream_variants(f, neglected, local) : downstream_variants(f, neglected, local);
    return build_tensor(run_fragment(f, vs, ExecMode::exact_mode()).results, f, local, neglected);
}

// H, CNOT on wires 0 and 1, cut on wire 1, then a rotation and CNOT into wire 2.
Circuit bell_fig1(bool plus_readout) {
    Circuit c(3);
    c.add(Gate::h(0)).add(Gate::cnot(0, 1)).cut_here(1, 1);
    if (plus_readout) c.add(Gate::h(0));
    c.add(Gate::ry(1, 0.9)).add(Gate::cnot(1, 2));
    return c;
}

double at(const FragmentTensor& t, Pauli p) {
    const Pauli tuple[] = {p};
    return t.at(tuple);
}

std::vector<int> iota(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const CutError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return Errc::InvalidArgument;
}

}  // namespace

TEST(TupleIndex, FirstCutMostSignificant) {
    EXPECT_EQ(tuple_count(2), 16U);
    EXPECT_EQ(tuple_digit(0b0111, 0, 2), Pauli::X);
    EXPECT_EQ(tuple_digit(0b0111, 1, 2), Pauli::Z);
}

TEST(BuildTensor, ZeroStateUpstream) {
    const Fragment f = bare(Side::Upstream, 1, {});
    const auto a = exact_tensor(f, ObservableSpec::pauli_string({}, {}));
    EXPECT_DOUBLE_EQ(at(a, Pauli::I), 1.0);
    EXPECT_DOUBLE_EQ(at(a, Pauli::Z), 1.0);
    EXPECT_NEAR(at(a, Pauli::X), 0.0, 1e-15);
    EXPECT_NEAR(at(a, Pauli::Y), 0.0, 1e-15);
}

TEST(BuildTensor, IdentityDownstreamZ) {
    const Fragment f = bare(Side::Downstream, 1, {0});
    const auto b = exact_tensor(f, ObservableSpec::pauli_string({0}, {Pauli::Z}));
    EXPECT_DOUBLE_EQ(at(b, Pauli::I), 0.0);
    EXPECT_DOUBLE_EQ(at(b, Pauli::Z), 2.0);
    EXPECT_NEAR(at(b, Pauli::X), 0.0, 1e-15);
    EXPECT_NEAR(at(b, Pauli::Y), 0.0, 1e-15);
}

TEST(Contract, IdentityPassThrough) {
    const auto a = exact_tensor(bare(Side::Upstream, 1, {}), ObservableSpec::pauli_string({}, {}));
    const auto b = exact_tensor(bare(Side::Downstream, 1, {0}), ObservableSpec::pauli_string({0}, {Pauli::Z}));
    const auto rec = contract_expectation(a, b, {});
    EXPECT_DOUBLE_EQ(rec.value, 1.0);
    EXPECT_EQ(rec.terms_evaluated, 4U);
}

TEST(BuildTensor, BellOrthogonalObservable) {
    const auto parts = bipartition(bell_fig1(false));
    const auto local = localize(ObservableSpec::pauli_string({0}, {Pauli::X}), parts.upstream);
    const auto a = exact_tensor(parts.upstream, local);
    EXPECT_NEAR(at(a, Pauli::Z), 0.0, 1e-12);
    EXPECT_NEAR(at(a, Pauli::I), 0.0, 1e-12);
    EXPECT_NEAR(at(a, Pauli::X), 1.0, 1e-12);

    const std::vector<oracle::Dense> obs{oracle::pauli('X'), oracle::pauli('I')};
    for (char p : {'I', 'X', 'Y', 'Z'}) {
        EXPECT_NEAR(at(a, *pauli_from_char(p)), oracle::upstream_entry(parts.upstream.circuit, obs, {1}, {p}), 1e-12);
    }
}

TEST(BuildTensor, BellPlusProjector) {
    const auto parts = bipartition(bell_fig1(true));
    const auto local = localize(ObservableSpec::projector({0}, {0}), parts.upstream);
    const auto a = exact_tensor(parts.upstream, local);
    EXPECT_NEAR(at(a, Pauli::Z), 0.0, 1e-12);
    EXPECT_NEAR(at(a, Pauli::I), 0.5, 1e-12);
}

TEST(BuildTensor, UpstreamEntriesMatchOracle) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int k = 1 + static_cast<int>(seed % 2);
        const auto parts = bipartition(random_cut_circuit(5, k, 2, seed));
        const Fragment& f1 = parts.upstream;
        std::vector<int> qs;
        std::vector<Pauli> ps;
        std::vector<oracle::Dense> factors(f1.width(), oracle::pauli('I'));
        for (int q : f1.output_qubits) {
            const char l = "XYZ"[(seed + q) % 3];
            qs.push_back(q);
            ps.push_back(*pauli_from_char(l));
            factors[q] = oracle::pauli(l);
        }
        const auto a = exact_tensor(f1, ObservableSpec::pauli_string(qs, ps));
        std::vector<int> cut_qubits;
        for (const auto& c : f1.upstream_cuts) cut_qubits.push_back(c.local);
        for (std::size_t m = 0; m < tuple_count(k); ++m) {
            std::vector<char> tuple;
            for (int i = 0; i < k; ++i) tuple.push_back(pauli_char(tuple_digit(m, i, k)));
            EXPECT_NEAR(a.entry(m)[0], oracle::upstream_entry(f1.circuit, factors, cut_qubits, tuple), 1e-10);
        }
    }
}

TEST(BuildTensor, DownstreamEntriesMatchOracle) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const int k = 1 + static_cast<int>(seed % 2);
        const auto parts = bipartition(random_cut_circuit(5, k, 2, seed + 40));
        const Fragment& f2 = parts.downstream;
        std::vector<int> qs;
        std::vector<int> bits;
        std::vector<oracle::Dense> factors(f2.width(), oracle::pauli('I'));
        for (int q : f2.output_qubits) {
            const int b = static_cast<int>((seed + q) % 2);
            qs.push_back(q);
            bits.push_back(b);
            factors[q] = b ? oracle::ket_bra(0, 1) : oracle::ket_bra(1, 0);
        }
        const auto b = exact_tensor(f2, ObservableSpec::projector(qs, bits));
        std::vector<int> cut_qubits;
        for (const auto& c : f2.downstream_cuts) cut_qubits.push_back(c.local);
        const auto op = oracle::product_operator(factors);
        for (std::size_t m = 0; m < tuple_count(k); ++m) {
            std::vector<char> tuple;
            for (int i = 0; i < k; ++i) tuple.push_back(pauli_char(tuple_digit(m, i, k)));
            EXPECT_NEAR(b.entry(m)[0], oracle::downstream_entry(f2.circuit, op, cut_qubits, tuple), 1e-10);
            EXPECT_LE(std::abs(b.entry(m)[0]), std::ldexp(1.0, k) + 1e-12);
        }
    }
}

TEST(BuildTensor, Errors) {
    const auto parts = bipartition(bell_fig1(false));
    const auto local = localize(ObservableSpec::pauli_string({0}, {Pauli::X}), parts.upstream);
    auto run = run_fragment(parts.upstream, upstream_variants(parts.upstream, {}, local), ExecMode::exact_mode());
    run.results.pop_back();
    EXPECT_EQ(code_of([&] { build_tensor(run.results, parts.upstream, local); }), Errc::MissingVariant);
    EXPECT_EQ(code_of([&] { build_tensor(run.results, parts.upstream, ObservableSpec::projector({1}, {0})); }),
              Errc::SupportMismatch);
    const auto starved =
        run_fragment(parts.upstream, upstream_variants(parts.upstream, {}, local), ExecMode::with_shots(0, 1));
    EXPECT_EQ(code_of([&] { build_tensor(starved.results, parts.upstream, local); }), Errc::ShotStarvation);
}

TEST(Contract, Errors) {
    const auto a = exact_tensor(bare(Side::Upstream, 1, {}), ObservableSpec::pauli_string({}, {}));
    const auto b = exact_tensor(bare(Side::Downstream, 1, {0}), ObservableSpec::pauli_string({0}, {Pauli::Z}));
    EXPECT_EQ(code_of([&] { contract_expectation(b, a, {}); }), Errc::WrongSide);
    auto b2 = b;
    b2.cut_ids = {2};
    EXPECT_EQ(code_of([&] { contract_expectation(a, b2, {}); }), Errc::ArityMismatch);
}

TEST(Contract, PrunedGoldenMatchesUnpruned) {
    const Circuit c = bell_fig1(false);
    const auto parts = bipartition(c);
    const auto obs = ObservableSpec::pauli_string({0, 2}, {Pauli::X, Pauli::Z});
    const auto full = run_cut(parts, obs, {}, ExecMode::exact_mode());
    const auto pruned = run_cut(parts, obs, {{1, Pauli::Z}}, ExecMode::exact_mode());
    EXPECT_NEAR(full.result.value, pruned.result.value, 1e-10);
    EXPECT_EQ(full.result.terms_evaluated, 4U);
    EXPECT_EQ(pruned.result.terms_evaluated, 3U);
    const std::vector<oracle::Dense> f{oracle::pauli('X'), oracle::pauli('I'), oracle::pauli('Z')};
    EXPECT_NEAR(full.result.value, oracle::expectation(oracle::state(c), oracle::product_operator(f)), 1e-10);
}

TEST(Contract, ExpectationMatchesOracle) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 3 + static_cast<int>(seed % 5);
        const int k = 1 + static_cast<int>(seed % 2);
        const Circuit c = random_cut_circuit(n, k, 2, seed + 500);
        std::vector<int> qs;
        std::vector<Pauli> ps;
        std::vector<oracle::Dense> f;
        for (int q = 0; q < n; ++q) {
            const char l = "IXYZ"[(seed * 7 + q) % 4];
            qs.push_back(q);
            ps.push_back(*pauli_from_char(l));
            f.push_back(oracle::pauli(l));
        }
        const auto run = run_cut(bipartition(c), ObservableSpec::pauli_string(qs, ps), {}, ExecMode::exact_mode());
        EXPECT_NEAR(run.result.value, oracle::expectation(oracle::state(c), oracle::product_operator(f)), 1e-10);
        EXPECT_EQ(run.result.terms_evaluated, term_count(k, 0).basis_tuples);
    }
}

TEST(Contract, IdentityCircuitDistribution) {
    Circuit c(2);
    c.add(Gate::cnot(0, 1)).cut_here(1, 1);
    const auto run = run_cut(bipartition(c), ObservableSpec::distribution({0, 1}), {}, ExecMode::exact_mode());
    EXPECT_EQ(run.result.wires, (std::vector<int>{0, 1}));
    EXPECT_NEAR(run.result.distribution[0], 1.0, 1e-12);
    EXPECT_EQ(run.result.raw, run.result.distribution);
}

TEST(Contract, BellAcrossCut) {
    Circuit c(2);
    c.add(Gate::h(0)).add(Gate::cnot(0, 1)).cut_here(1, 1);
    const auto run = run_cut(bipartition(c), ObservableSpec::distribution({0, 1}), {}, ExecMode::exact_mode());
    const std::vector<double> want{0.5, 0.0, 0.0, 0.5};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(run.result.distribution[i], want[i], 1e-12);
}

TEST(Contract, GoldenAnsatzDistribution) {
    const Circuit c = golden_ansatz(5, 2, 7);
    const auto run = run_cut(bipartition(c), ObservableSpec::distribution(iota(5)), {}, ExecMode::exact_mode());
    const auto want = oracle::marginal(oracle::state(c), 5, iota(5));
    double sum = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(run.result.raw[i], want[i], 1e-10);
        sum += run.result.raw[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
    const auto pruned = run_cut(bipartition(c), ObservableSpec::distribution(iota(5)), {{1, Pauli::Y}}, ExecMode::exact_mode());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(pruned.result.raw[i], run.result.raw[i], 1e-10);
    EXPECT_EQ(pruned.result.terms_evaluated, 3U);
}

TEST(Contract, InterleavedOutputWires) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const int k = 1 + static_cast<int>(seed % 2);
        const Circuit c = random_cut_circuit(n, k, 2, seed + 900);
        const auto run = run_cut(bipartition(c), ObservableSpec::distribution(iota(n)), {}, ExecMode::exact_mode());
        const auto want = oracle::marginal(oracle::state(c), n, iota(n));
        for (std::size_t i = 0; i < want.size(); ++i) ASSERT_NEAR(run.result.raw[i], want[i], 1e-10) << seed;
    }
}

TEST(Contract, ClampAndRenormalize) {
    FragmentTensor a, b;
    a.side = Side::Upstream;
    b.side = Side::Downstream;
    a.mode = b.mode = TensorMode::Distribution;
    a.cut_ids = b.cut_ids = {1};
    a.out_wires = {0};
    b.out_wires = {1};
    a.present = b.present = std::vector<bool>(4, true);
    a.values.assign(8, 0.0);
    b.values.assign(8, 0.0);
    a.values[0] = 1.0, a.values[1] = 1.0;  // I entry
    b.values[0] = 1.2, b.values[1] = -0.2;
    const auto rec = contract_distribution(a, b, {});
    EXPECT_EQ(rec.wires, (std::vector<int>{0, 1}));
    EXPECT_NEAR(rec.raw[1], -0.1, 1e-15);
    EXPECT_EQ(rec.distribution[1], 0.0);
    EXPECT_NEAR(rec.distribution[0] + rec.distribution[2], 1.0, 1e-15);
    EXPECT_NEAR(rec.distribution[0], 0.5, 1e-15);
}

TEST(Contract, FiniteShotsConverge) {
    const Circuit c = bell_fig1(false);
    const auto obs = ObservableSpec::pauli_string({0, 2}, {Pauli::X, Pauli::X});
    const double exact = run_cut(bipartition(c), obs, {}, ExecMode::exact_mode()).result.value;
    for (std::uint64_t seed : {1U, 2U, 3U}) {
        const auto run = run_cut(bipartition(c), obs, {}, ExecMode::with_shots(100000, seed));
        EXPECT_LT(std::abs(run.result.value - exact), 0.05);
        EXPECT_EQ(run.result.shots_used, 9U * 100000U);
    }
}

TEST(TermCount, Examples) {
    EXPECT_EQ(term_count(1, 0).basis_tuples, 4U);
    EXPECT_EQ(term_count(1, 0).eigen_terms, 16U);
    EXPECT_EQ(term_count(0, 1).basis_tuples, 3U);
    EXPECT_EQ(term_count(0, 1).eigen_terms, 12U);
    EXPECT_EQ(term_count(1, 1).basis_tuples, 12U);
    EXPECT_THROW(term_count(-1, 0), CutError);
}

TEST(TermCount, MatchesEnumeration) {
    for (int kr = 0; kr <= 3; ++kr) {
        for (int kg = 0; kg + kr <= 3; ++kg) {
            const int k = kr + kg;
            std::uint64_t tuples = 0, eigen = 0;
            for (std::size_t m = 0; m < tuple_count(k); ++m) {
                bool keep = true;
                for (int i = kr; i < k; ++i) keep = keep && tuple_digit(m, i, k) != Pauli::Y;
                if (!keep) continue;
                ++tuples;
                for (std::size_t r = 0; r < (std::size_t{1} << k); ++r)
                    for (std::size_t s = 0; s < (std::size_t{1} << k); ++s) ++eigen;
            }
            EXPECT_EQ(term_count(kr, kg).basis_tuples, tuples);
            EXPECT_EQ(term_count(kr, kg).eigen_terms, eigen);
        }
    }
}

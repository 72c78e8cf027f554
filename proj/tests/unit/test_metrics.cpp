#include <gtest/gtest.h>

#include <algorithm>

#include "gcut/error.hpp"
#include "gcut/metrics.hpp"
#include "gcut/rng.hpp"

using namespace gcut;

namespace {

double dw(const std::vector<double>& p, const std::vector<double>& q) { return weighted_distance(p, q).distance; }

}  // namespace

TEST(WeightedDistance, Identical) {
    const std::vector<double> p{0.125, 0.375, 0.5};
    EXPECT_EQ(dw(p, p), 0.0);
}

TEST(WeightedDistance, ArithmeticExample) {
    EXPECT_NEAR(dw({0.5, 0.5}, {0.25, 0.75}), 1.0 / 3.0, 1e-15);
}

TEST(WeightedDistance, MissingOutcomeContributesReferenceMass) {
    // q = {0.1, 0.9}, p puts nothing on the first outcome: (0 - 0.1)^2 / 0.1 plus the second term.
    const double d = dw({0.0, 1.0}, {0.1, 0.9});
    EXPECT_NEAR(d, 0.1 + 0.01 / 0.9, 1e-15);
}

TEST(WeightedDistance, OutsideSupportReportedSeparately) {
    const auto d = weighted_distance(std::vector<double>{0.25, 0.25, 0.5}, std::vector<double>{0.5, 0.0, 0.5});
    EXPECT_NEAR(d.distance, 0.125, 1e-15);
    EXPECT_NEAR(d.mass_outside_support, 0.25, 1e-15);
}

TEST(WeightedDistance, ZeroOnlyWhenEqualOnSupport) {
    EXPECT_EQ(dw({0.5, 0.0, 0.5}, {0.5, 0.0, 0.5}), 0.0);
    EXPECT_GT(dw({0.5, 0.25, 0.25}, {0.5, 0.0, 0.5}), 0.0);
}

TEST(WeightedDistance, PermutationInvariant) {
    SplitMix64 rng(3);
    std::vector<double> p(8), q(8);
    double sp = 0, sq = 0;
    for (int i = 0; i < 8; ++i) {
        p[i] = rng.uniform() + 0.01;
        q[i] = rng.uniform() + 0.01;
        sp += p[i];
        sq += q[i];
    }
    for (int i = 0; i < 8; ++i) p[i] /= sp, q[i] /= sq;
    const double base = dw(p, q);
    std::vector<int> perm{3, 1, 7, 0, 5, 2, 6, 4};
    std::vector<double> pp(8), qq(8);
    for (int i = 0; i < 8; ++i) pp[i] = p[perm[i]], qq[i] = q[perm[i]];
    EXPECT_NEAR(dw(pp, qq), base, 1e-12);
}

TEST(WeightedDistance, Errors) {
    auto code = [](const std::vector<double>& p, const std::vector<double>& q) {
        try {
            weighted_distance(p, q);
        } catch (const CutError& e) {
            return e.code();
        }
        return Errc::Parse;
    };
    EXPECT_EQ(code({1.0}, {0.5, 0.5}), Errc::SupportMismatch);
    EXPECT_EQ(code({0.5, 0.4}, {0.5, 0.5}), Errc::InvalidArgument);
    EXPECT_EQ(code({}, {}), Errc::InvalidArgument);
}

TEST(Ledger, SingleCut) {
    const Ledger base = planned_ledger({1}, {}, 1000);
    EXPECT_EQ(base, (Ledger{3, 6, 9000, 4}));
    const Ledger pruned = planned_ledger({1}, {{1, Pauli::Y}}, 1000);
    EXPECT_EQ(pruned, (Ledger{2, 4, 6000, 3}));
    const Ledger z = planned_ledger({1}, {{1, Pauli::Z}}, 1000);
    EXPECT_EQ(z, (Ledger{3, 6, 9000, 3}));
}

TEST(CostReport, OneGoldenCut) {
    const auto r = cost_report(planned_ledger({1}, {{1, Pauli::Y}}, 10000), planned_ledger({1}, {}, 10000));
    EXPECT_EQ(r.pruned.variants() * 3, r.baseline.variants() * 2);
    EXPECT_NEAR(r.variant_savings, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(r.shot_savings, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(r.downstream_savings, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(r.tuple_savings, 0.25, 1e-15);
}

TEST(CostReport, NoGoldenNoSavings) {
    const auto r = cost_report(planned_ledger({1, 2}, {}, 100), planned_ledger({1, 2}, {}, 100));
    EXPECT_EQ(r.variant_savings, 0.0);
    EXPECT_EQ(r.tuple_savings, 0.0);
}

TEST(CostReport, TwoCutsOneGolden) {
    const Ledger p = planned_ledger({1, 2}, {{2, Pauli::Y}}, 1);
    const Ledger b = planned_ledger({1, 2}, {}, 1);
    EXPECT_EQ(p.downstream_variants, 24U);
    EXPECT_EQ(b.downstream_variants, 36U);
    EXPECT_EQ(p.basis_tuples, 12U);
    EXPECT_EQ(b.basis_tuples, 16U);
}

TEST(CostReport, ClosedForms) {
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> ids;
        for (int i = 1; i <= k; ++i) ids.push_back(i);
        for (int kg = 0; kg <= k; ++kg) {
            NeglectSet n;
            for (int i = 1; i <= kg; ++i) n.insert({i, Pauli::X});
            const Ledger l = planned_ledger(ids, n, 1);
            std::uint64_t six = 1, four = 1, three = 1, tup = 1;
            for (int i = 0; i < k - kg; ++i) six *= 6, tup *= 4, three *= 3;
            for (int i = 0; i < kg; ++i) four *= 4, tup *= 3, three *= 2;
            EXPECT_EQ(l.downstream_variants, six * four);
            EXPECT_EQ(l.upstream_variants, three);
            EXPECT_EQ(l.basis_tuples, tup);
        }
    }
}

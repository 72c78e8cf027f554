#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcut/fragmenter.hpp"

namespace gcut {

enum class TensorMode { Expectation, Distribution };

inline constexpr int kMaxTensorCuts = 8;

/// Basis tuples are indexed base 4 with the lowest cut_id as the most significant digit.
std::size_t tuple_count(int n_cuts) noexcept;
Pauli tuple_digit(std::size_t tuple, int position, int n_cuts) noexcept;

/// Signed fragment coefficients per basis tuple: a scalar per tuple in expectation
/// mode, a vector over the fragment's output bitstrings in distribution mode.
struct FragmentTensor {
    Side side = Side::Upstream;
    TensorMode mode = TensorMode::Expectation;
    std::vector<int> cut_ids;
    std::vector<int> out_wires;   // parent wire per output bit (distribution mode)
    std::vector<double> values;   // tuple-major, `width()` values per tuple
    std::vector<bool> present;    // false for neglected tuples
    std::uint64_t shots = 0;      // total samples behind the entries (0 when exact)

    [[nodiscard]] int n_cuts() const noexcept { return static_cast<int>(cut_ids.size()); }
    [[nodiscard]] std::size_t width() const noexcept {
        return mode == TensorMode::Distribution ? std::size_t{1} << out_wires.size() : 1;
    }
    [[nodiscard]] std::span<const double> entry(std::size_t tuple) const {
        return {values.data() + tuple * width(), width()};
    }
    /// Scalar entry for a tuple given as one Pauli per cut.
    [[nodiscard]] double at(std::span<const Pauli> tuple) const;
};

/// Assembles the signed tensor of one fragment from its variant results.
/// `local_obs` must come from `localize` for the same fragment.
FragmentTensor build_tensor(const std::vector<VariantResult>& results, const Fragment& fragment,
                            const ObservableSpec& local_obs, const NeglectSet& neglected = {});

struct Reconstruction {
    TensorMode mode = TensorMode::Expectation;
    double value = 0.0;
    std::vector<double> distribution;  // clamped and renormalized
    std::vector<double> raw;           // distribution before clamping
    std::vector<int> wires;            // parent wire per distribution bit, ascending
    std::uint64_t terms_evaluated = 0;
    NeglectSet neglected;
    std::uint64_t shots_used = 0;
};

/// (1/2^K) sum over allowed tuples of A[M] * B[M].
Reconstruction contract_expectation(const FragmentTensor& a, const FragmentTensor& b, const NeglectSet& neglected);
/// Same contraction per pair of output bitstrings, reassembled in parent wire order.
Reconstruction contract_distribution(const FragmentTensor& a, const FragmentTensor& b, const NeglectSet& neglected);

struct TermCount {
    std::uint64_t basis_tuples;
    std::uint64_t eigen_terms;  // tuples times the 2^K x 2^K eigenvalue sign choices
};

/// Work for K_r regular cuts and K_g cuts with one neglected basis each.
TermCount term_count(int regular_cuts, int golden_cuts);

/// End-to-end cut execution for a fixed neglect set.
struct CutRun {
    FragmentRun upstream;
    FragmentRun downstream;
    FragmentTensor a;
    FragmentTensor b;
    Reconstruction result;
};

CutRun run_cut(const Bipartition& parts, const ObservableSpec& parent_obs, const NeglectSet& neglected,
               const ExecMode& mode);

}  // namespace gcut

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace gcut {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;  // row-major
using Vec2 = std::array<cplx, 2>;

/// Single-qubit Pauli label. The numeric value is the digit used in basis-tuple indices.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kPaulis{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
inline constexpr std::array<Pauli, 3> kMeasuredPaulis{Pauli::X, Pauli::Y, Pauli::Z};

char pauli_char(Pauli p) noexcept;
std::optional<Pauli> pauli_from_char(char c) noexcept;

Mat2 pauli_matrix(Pauli p) noexcept;

struct EigenPair {
    double eigenvalue;
    Mat2 projector;
};

/// Two (eigenvalue, rank-1 projector) pairs. For I both eigenvalues are +1 with
/// projectors |0><0| and |1><1|, so eigenvalue-weighted sums reproduce every matrix.
std::array<EigenPair, 2> eigendecomposition(Pauli p) noexcept;

/// The six single-qubit preparations used on downstream cut wires.
enum class PrepState : std::uint8_t { Zero, One, Plus, Minus, PlusI, MinusI };

inline constexpr std::array<PrepState, 6> kPrepStates{PrepState::Zero, PrepState::One,  PrepState::Plus,
                                                      PrepState::Minus, PrepState::PlusI, PrepState::MinusI};

std::string prep_name(PrepState s);
std::optional<PrepState> prep_from_name(const std::string& name);

/// Preparation for the `sign` eigenvector of `p`. For I, sign +1 selects |0> and -1 selects |1>.
PrepState prep_for(Pauli p, int sign);

/// Basis whose eigenvector is `s`, together with its sign (Z for |0>,|1>).
std::pair<Pauli, int> basis_of(PrepState s) noexcept;

Vec2 prep_vector(PrepState s) noexcept;

}  // namespace gcut

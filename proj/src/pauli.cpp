#include "gcut/pauli.hpp"

#include <cmath>

#include "gcut/error.hpp"

namespace gcut {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InvalidCircuit: return "InvalidCircuit";
        case Errc::NoCuts: return "NoCuts";
        case Errc::NotBipartite: return "NotBipartite";
        case Errc::CyclicCut: return "CyclicCut";
        case Errc::AnsatzNotGolden: return "AnsatzNotGolden";
        case Errc::TooWide: return "TooWide";
        case Errc::InvalidInitial: return "InvalidInitial";
        case Errc::SupportMismatch: return "SupportMismatch";
        case Errc::IdentityBasisRequested: return "IdentityBasisRequested";
        case Errc::AllBasesNeglected: return "AllBasesNeglected";
        case Errc::MissingVariant: return "MissingVariant";
        case Errc::ShotStarvation: return "ShotStarvation";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::EmptySupport: return "EmptySupport";
        case Errc::WrongSide: return "WrongSide";
        case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

char pauli_char(Pauli p) noexcept {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(p)];
}

std::optional<Pauli> pauli_from_char(char c) noexcept {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default: return std::nullopt;
    }
}

Mat2 pauli_matrix(Pauli p) noexcept {
    const cplx i{0.0, 1.0};
    switch (p) {
        case Pauli::I: return {1.0, 0.0, 0.0, 1.0};
        case Pauli::X: return {0.0, 1.0, 1.0, 0.0};
        case Pauli::Y: return {0.0, -i, i, 0.0};
        case Pauli::Z: return {1.0, 0.0, 0.0, -1.0};
    }
    return {};
}

namespace {

Mat2 outer(const Vec2& v) {
    return {v[0] * std::conj(v[0]), v[0] * std::conj(v[1]), v[1] * std::conj(v[0]), v[1] * std::conj(v[1])};
}

}  // namespace

std::array<EigenPair, 2> eigendecomposition(Pauli p) noexcept {
    const double lo = p == Pauli::I ? 1.0 : -1.0;
    return {EigenPair{1.0, outer(prep_vector(prep_for(p, +1)))},
            EigenPair{lo, outer(prep_vector(prep_for(p, -1)))}};
}

std::string prep_name(PrepState s) {
    switch (s) {
        case PrepState::Zero: return "0";
        case PrepState::One: return "1";
        case PrepState::Plus: return "+";
        case PrepState::Minus: return "-";
        case PrepState::PlusI: return "+i";
        case PrepState::MinusI: return "-i";
    }
    return "?";
}

std::optional<PrepState> prep_from_name(const std::string& name) {
    for (PrepState s : kPrepStates) {
        if (prep_name(s) == name) return s;
    }
    return std::nullopt;
}

PrepState prep_for(Pauli p, int sign) {
    const bool plus = sign > 0;
    switch (p) {
        case Pauli::I:
        case Pauli::Z: return plus ? PrepState::Zero : PrepState::One;
        case Pauli::X: return plus ? PrepState::Plus : PrepState::Minus;
        case Pauli::Y: return plus ? PrepState::PlusI : PrepState::MinusI;
    }
    return PrepState::Zero;
}

std::pair<Pauli, int> basis_of(PrepState s) noexcept {
    switch (s) {
        case PrepState::Zero: return {Pauli::Z, +1};
        case PrepState::One: return {Pauli::Z, -1};
        case PrepState::Plus: return {Pauli::X, +1};
        case PrepState::Minus: return {Pauli::X, -1};
        case PrepState::PlusI: return {Pauli::Y, +1};
        case PrepState::MinusI: return {Pauli::Y, -1};
    }
    return {Pauli::Z, +1};
}

Vec2 prep_vector(PrepState s) noexcept {
    constexpr double h = M_SQRT1_2;
    switch (s) {
        case PrepState::Zero: return {1.0, 0.0};
        case PrepState::One: return {0.0, 1.0};
        case PrepState::Plus: return {h, h};
        case PrepState::Minus: return {h, -h};
        case PrepState::PlusI: return {h, cplx{0.0, h}};
        case PrepState::MinusI: return {h, cplx{0.0, -h}};
    }
    return {1.0, 0.0};
}

}  // namespace gcut

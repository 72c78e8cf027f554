#pragma once

#include <stdexcept>
#include <string>

namespace gcut {

enum class Errc {
    InvalidArgument,
    InvalidCircuit,
    NoCuts,
    NotBipartite,
    CyclicCut,
    AnsatzNotGolden,
    TooWide,
    InvalidInitial,
    SupportMismatch,
    IdentityBasisRequested,
    AllBasesNeglected,
    MissingVariant,
    ShotStarvation,
    ArityMismatch,
    EmptySupport,
    WrongSide,
    Parse,
};

const char* errc_name(Errc code) noexcept;

/// Library-wide exception; `code()` identifies the failure class.
class CutError : public std::runtime_error {
public:
    CutError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace gcut

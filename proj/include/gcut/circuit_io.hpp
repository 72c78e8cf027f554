#pragma once

#include <string>

#include "gcut/circuit.hpp"

namespace gcut {

/// Canonical circuit JSON: keys in the order n_qubits, gates, cuts (gate keys
/// kind, qubits, params, matrix), floats with 17 significant digits, one gate
/// per line. Equal circuits serialize to identical bytes.
std::string circuit_to_json(const Circuit& circuit);

/// Parses circuit JSON. Throws CutError(Parse) on malformed input; the result is
/// not validated.
Circuit circuit_from_json(const std::string& text);

std::string format_double(double v);

}  // namespace gcut

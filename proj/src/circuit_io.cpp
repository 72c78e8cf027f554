#include "gcut/circuit_io.hpp"

#include <cstdio>
#include "json.hpp"

#include "gcut/error.hpp"

namespace gcut {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

template <class T, class F>
std::string join(const std::vector<T>& items, F&& fmt) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += fmt(items[i]);
    }
    return out + "]";
}

}  // namespace

std::string circuit_to_json(const Circuit& circuit) {
    std::string out = "{\n  \"n_qubits\": " + std::to_string(circuit.n_qubits()) + ",\n  \"gates\": [";
    const auto& gates = circuit.gates();
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const Gate& gate = gates[g];
        out += g ? ",\n    " : "\n    ";
        out += "{\"kind\": \"" + gate_kind_name(gate.kind) + "\", \"qubits\": ";
        out += join(gate.qubits, [](int q) { return std::to_string(q); });
        out += ", \"params\": " + join(gate.params, format_double);
        if (gate.kind == GateKind::Unitary) {
            out += ", \"matrix\": " + join(gate.matrix, [](const cplx& z) {
                       return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
                   });
        }
        out += "}";
    }
    out += gates.empty() ? "],\n  \"cuts\": [" : "\n  ],\n  \"cuts\": [";
    const auto& cuts = circuit.cuts();
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        out += i ? ",\n    " : "\n    ";
        out += "{\"qubit\": " + std::to_string(cuts[i].qubit) + ", \"after_gate\": " +
               std::to_string(cuts[i].after_gate) + ", \"cut_id\": " + std::to_string(cuts[i].cut_id) + "}";
    }
    out += cuts.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

Circuit circuit_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Circuit c(j.at("n_qubits").get<int>());
        for (const auto& jg : j.at("gates")) {
            Gate g;
            g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
            g.qubits = jg.at("qubits").get<std::vector<int>>();
            if (jg.contains("params")) g.params = jg.at("params").get<std::vector<double>>();
            if (jg.contains("matrix")) {
                for (const auto& z : jg.at("matrix")) g.matrix.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
            }
            c.add(std::move(g));
        }
        if (j.contains("cuts")) {
            for (const auto& jc : j.at("cuts")) {
                c.add_cut({jc.at("qubit").get<int>(), jc.at("after_gate").get<int>(), jc.at("cut_id").get<int>()});
            }
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw CutError(Errc::Parse, e.what());
    }
}

}  // namespace gcut

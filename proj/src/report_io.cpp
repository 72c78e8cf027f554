#include "gcut/report_io.hpp"

#include <algorithm>

#include "gcut/error.hpp"

namespace gcut {

ordered_json counts_to_json(const Counts& counts) {
    ordered_json c = ordered_json::object();
    for (std::size_t i = 0; i < counts.tally.size(); ++i) {
        if (counts.tally[i]) c[bitstring(i, counts.n_bits)] = counts.tally[i];
    }
    return {{"shots", counts.shots}, {"counts", c}};
}

Counts counts_from_json(const ordered_json& j, int n_bits) {
    Counts out{n_bits, 0, std::vector<std::uint64_t>(std::size_t{1} << n_bits, 0)};
    try {
        out.shots = j.at("shots").get<std::uint64_t>();
        std::uint64_t total = 0;
        for (const auto& [bits, n] : j.at("counts").items()) {
            if (static_cast<int>(bits.size()) != n_bits) throw CutError(Errc::Parse, "bitstring width");
            out.tally.at(std::stoull(bits, nullptr, 2)) = n.get<std::uint64_t>();
            total += n.get<std::uint64_t>();
        }
        if (total != out.shots) throw CutError(Errc::Parse, "counts do not sum to shots");
    } catch (const nlohmann::json::exception& e) {
        throw CutError(Errc::Parse, e.what());
    }
    return out;
}

ordered_json variant_results_to_json(const std::vector<VariantResult>& results) {
    std::vector<const VariantResult*> sorted;
    for (const auto& r : results) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->key < b->key; });

    ordered_json arr = ordered_json::array();
    for (const VariantResult* r : sorted) {
        ordered_json key = ordered_json::object();
        for (const auto& [cut, p] : r->key.bases) key[std::to_string(cut)] = std::string(1, pauli_char(p));
        for (const auto& [cut, s] : r->key.preps) key[std::to_string(cut)] = prep_name(s);
        ordered_json data;
        if (r->exact) {
            data = ordered_json::object();
            for (std::size_t i = 0; i < r->probabilities.size(); ++i) {
                if (r->probabilities[i] != 0.0) data[bitstring(i, r->n_bits)] = r->probabilities[i];
            }
        } else {
            data = counts_to_json(r->counts);
        }
        ordered_json cut_bits = ordered_json::object();
        for (const auto& [cut, pos] : r->cut_bits) cut_bits[std::to_string(cut)] = pos;
        arr.push_back({{"key", key},
                       {"mode", r->exact ? "exact" : "shots"},
                       {"data", data},
                       {"cut_bits", cut_bits},
                       {"output_bits", r->output_bits}});
    }
    return arr;
}

namespace {

ordered_json neglect_json(const NeglectSet& neglected) {
    ordered_json arr = ordered_json::array();
    for (const auto& [cut, p] : neglected) arr.push_back({{"cut", cut}, {"basis", std::string(1, pauli_char(p))}});
    return arr;
}

ordered_json dist_json(const std::vector<double>& v, int n_bits) {
    ordered_json d = ordered_json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0.0) d[bitstring(i, n_bits)] = v[i];
    }
    return d;
}

}  // namespace

ordered_json reconstruction_to_json(const Reconstruction& rec) {
    ordered_json j = ordered_json::object();
    if (rec.mode == TensorMode::Expectation) {
        j["value"] = rec.value;
        j["raw"] = rec.value;
    } else {
        const int n = static_cast<int>(rec.wires.size());
        j["distribution"] = dist_json(rec.distribution, n);
        j["raw"] = dist_json(rec.raw, n);
        j["wires"] = rec.wires;
    }
    j["terms_evaluated"] = rec.terms_evaluated;
    j["neglected"] = neglect_json(rec.neglected);
    j["shots_used"] = rec.shots_used;
    return j;
}

ordered_json golden_report_to_json(const GoldenReport& report) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json j = {{"cut", e.cut_id},
                          {"basis", std::string(1, pauli_char(e.basis))},
                          {"magnitude", e.magnitude},
                          {"golden", e.golden}};
        if (e.radius) j["radius"] = *e.radius;
        if (e.shots) j["shots"] = *e.shots;
        if (!e.note.empty()) j["note"] = e.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

ordered_json ledger_to_json(const Ledger& l) {
    return {{"upstream_variants", l.upstream_variants},
            {"downstream_variants", l.downstream_variants},
            {"variants", l.variants()},
            {"shots_total", l.shots_total},
            {"basis_tuples", l.basis_tuples}};
}

ordered_json cost_report_to_json(const CostReport& r) {
    return {{"pruned", ledger_to_json(r.pruned)},
            {"baseline", ledger_to_json(r.baseline)},
            {"variant_savings", r.variant_savings},
            {"downstream_savings", r.downstream_savings},
            {"shot_savings", r.shot_savings},
            {"tuple_savings", r.tuple_savings}};
}

}  // namespace gcut

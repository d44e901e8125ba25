#include "hyperlap/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace hyperlap {

namespace {

std::vector<int> parse_side(const ordered_json& h, const char* key, std::size_t index) {
    std::vector<int> side;
    if (!h.contains(key)) return side;
    const auto& arr = h.at(key);
    if (!arr.is_array())
        throw std::runtime_error("hyperedge " + std::to_string(index) + ": \"" + key +
                                 "\" must be an array");
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw std::runtime_error("hyperedge " + std::to_string(index) + ": \"" + key +
                                     "\" must hold integers");
        side.push_back(v.get<int>());
    }
    return side;
}

} // namespace

HypergraphDocument parse_document(const std::string& text, bool allow_invalid) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("document must be a JSON object");
    if (!doc.contains("n") || !doc.at("n").is_number_integer())
        throw std::runtime_error("document needs an integer field \"n\"");
    const int n = doc.at("n").get<int>();
    if (n < 1) throw std::runtime_error("\"n\" must be at least 1");
    if (!doc.contains("hyperedges") || !doc.at("hyperedges").is_array())
        throw std::runtime_error("document needs an array field \"hyperedges\"");

    std::vector<Hyperedge> hyperedges;
    const auto& arr = doc.at("hyperedges");
    hyperedges.reserve(arr.size());
    for (std::size_t t = 0; t < arr.size(); ++t) {
        const auto& h = arr[t];
        if (!h.is_object())
            throw std::runtime_error("hyperedge " + std::to_string(t) + " must be an object");
        hyperedges.emplace_back(parse_side(h, "in", t), parse_side(h, "out", t));
    }

    HypergraphDocument out;
    if (doc.contains("name")) {
        if (!doc.at("name").is_string())
            throw std::runtime_error("\"name\" must be a string when present");
        out.name = doc.at("name").get<std::string>();
    }
    const bool isolated_flag =
        doc.contains("allow_isolated") && doc.at("allow_isolated").is_boolean() &&
        doc.at("allow_isolated").get<bool>();

    OrientedHypergraph g(n, std::move(hyperedges), isolated_flag);
    std::vector<Violation> violations = validate(g);
    if (!violations.empty() && allow_invalid) {
        bool only_degree_zero = true;
        for (const auto& v : violations)
            if (v.rule != "degree-zero") only_degree_zero = false;
        if (only_degree_zero) {
            g = OrientedHypergraph(g.vertex_count(), g.hyperedges(), true);
            violations = validate(g);
        }
    }
    if (!violations.empty()) {
        std::string msg = "invalid hypergraph:";
        for (const auto& v : violations) msg += "\n  " + v.rule + ": " + v.message;
        throw std::runtime_error(msg);
    }
    out.g = std::move(g);
    return out;
}

ordered_json serialize(const OrientedHypergraph& g, const std::string& name) {
    ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["hyperedges"] = ordered_json::array();
    for (const auto& h : g.hyperedges()) {
        ordered_json jh;
        jh["in"] = h.inputs;
        jh["out"] = h.outputs;
        doc["hyperedges"].push_back(std::move(jh));
    }
    if (!name.empty()) doc["name"] = name;
    if (g.allow_isolated()) doc["allow_isolated"] = true;
    return doc;
}

ordered_json json_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

ordered_json to_json(const BoundReport& report) {
    ordered_json j;
    j["name"] = report.name;
    j["status"] = to_string(report.status);
    j["statement"] = report.statement;
    j["relation"] = report.relation;
    j["lhs"] = json_real(report.lhs);
    j["rhs"] = json_real(report.rhs);
    j["slack"] = json_real(report.slack);
    if (!report.details.empty()) j["details"] = report.details;
    ordered_json w;
    if (report.witness.subset) w["subset"] = *report.witness.subset;
    if (report.witness.signs) w["signs"] = *report.witness.signs;
    if (report.witness.partition) w["partition"] = *report.witness.partition;
    if (!w.empty()) j["witness"] = std::move(w);
    return j;
}

ordered_json to_json(const NodalReport& report) {
    ordered_json j;
    j["operator"] = report.op;
    j["vector_index"] = report.vector_index;
    j["eigenvalue"] = json_real(report.eigenvalue);
    j["eigen_index"] = report.eigen_index;
    j["multiplicity"] = report.multiplicity;
    j["signless_count"] = report.signless_count;
    j["bound_signless"] = report.bound_signless;
    j["signless_pass"] = report.signless_pass;
    j["signed_applicable"] = report.signed_applicable;
    if (report.signed_applicable) {
        j["positive_count"] = report.positive_count;
        j["negative_count"] = report.negative_count;
        j["bound_signed"] = report.bound_signed;
        j["signed_pass"] = report.signed_pass;
    }
    return j;
}

ordered_json spectrum_json(const std::string& op_name, const Spectrum& spec, int m_v, int m_h) {
    ordered_json j;
    j["operator"] = op_name;
    j["eigenvalues"] = ordered_json::array();
    for (double ev : spec.eigenvalues) j["eigenvalues"].push_back(json_real(ev));
    j["m_V"] = m_v;
    j["m_H"] = m_h;
    j["clusters"] = ordered_json::array();
    for (const auto& c : spec.clusters) {
        ordered_json jc;
        jc["start"] = c.start + 1; // 1-based in reports
        jc["size"] = c.size;
        j["clusters"].push_back(std::move(jc));
    }
    return j;
}

namespace {

ordered_json subset_json(const VertexSubset& s) {
    ordered_json j;
    j["members"] = s.members;
    j["volume"] = s.vol;
    j["e_tilde"] = s.e_value;
    return j;
}

} // namespace

ordered_json cheeger_json(const CheegerResult& result, bool include_prime) {
    ordered_json j;
    j["h_tilde"] = json_real(result.h);
    j["argmin"] = subset_json(result.argmin);
    if (include_prime) {
        j["h_tilde_prime"] = json_real(result.h_prime);
        j["argmin_prime"] = subset_json(result.argmin_prime);
    }
    return j;
}

ordered_json matrix_json(const DenseMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string matrix_csv(const DenseMatrix& m) {
    std::string out;
    char buf[64];
    for (int i = 0; i < m.rows(); ++i) {
        for (int k = 0; k < m.cols(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, k));
            if (k) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace hyperlap

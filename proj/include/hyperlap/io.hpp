#pragma once

#include <string>

#include <json.hpp>

#include "hyperlap/cheeger.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"
#include "hyperlap/nodal.hpp"
#include "hyperlap/report.hpp"
#include "hyperlap/spectra.hpp"

namespace hyperlap {

using ordered_json = nlohmann::ordered_json;

// A parsed instance document: the hypergraph plus its optional name.
struct HypergraphDocument {
    OrientedHypergraph g{0, {}};
    std::string name; // empty when the document has none
};

// Parses the canonical JSON document
//   {"n": int, "hyperedges": [{"in": [...], "out": [...]}, ...], "name"?: str}
// and validates the result. Throws std::runtime_error on malformed JSON,
// schema violations, or rule violations; with allow_invalid, degree-zero
// violations are tolerated (the instance is marked allow_isolated) but
// structural violations still throw.
HypergraphDocument parse_document(const std::string& text, bool allow_invalid = false);

// Inverse of parse_document: hyperedge order is preserved and both sides are
// emitted sorted, so parse(serialize(g)) is structurally equal to g.
ordered_json serialize(const OrientedHypergraph& g, const std::string& name = "");

// Round-trips v through a 15-significant-digit decimal so every emitted
// float prints with at most 15 significant digits, deterministically.
ordered_json json_real(double v);

ordered_json to_json(const BoundReport& report);
ordered_json to_json(const NodalReport& report);

// {"operator":, "eigenvalues":, "m_V":, "m_H":, "clusters": [{start, size}]}
// with 1-based cluster start positions.
ordered_json spectrum_json(const std::string& op_name, const Spectrum& spec, int m_v, int m_h);

ordered_json cheeger_json(const CheegerResult& result, bool include_prime);

// Matrix exports keep full precision: JSON rows hold raw doubles
// (shortest round-trip form), CSV prints %.17g.
ordered_json matrix_json(const DenseMatrix& m);
std::string matrix_csv(const DenseMatrix& m);

} // namespace hyperlap

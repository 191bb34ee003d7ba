#pragma once

#include <nielsen/decision.hpp>
#include <nielsen/divisor_sequence.hpp>
#include <nielsen/model.hpp>
#include <nielsen/reid_graph.hpp>
#include <nielsen/smooth_real.hpp>
#include <nielsen/spectrum.hpp>
#include <nielsen/validators.hpp>

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace nielsen {

using Json = nlohmann::json;

// All integers are written as decimal strings. On input a bare JSON integer
// is accepted up to 2^63 - 1; larger values must be strings.

/// Parses a bare integer or a decimal string. `path` names the field in
/// error messages.
BigInt parse_bigint(const Json& j, const std::string& path);

/// {"matrix": [[...]], "group": [q^a, ...], "dimension": m, "label": "..."}
Model parse_model(const Json& j);
Model parse_model(std::string_view text);
inline Model parse_model(const char* text) { return parse_model(std::string_view(text)); }

/// Non-fatal remarks about a parsed model (e.g. dimension < 3 * rank).
std::vector<std::string> model_warnings(const Model& m);

/// {"horizon": n, "kind": "values"|"coefficients", "values": {"k": "..."}}
Json to_json(const DivisorSequence& s);
DivisorSequence parse_sequence(const Json& j);

Json to_json(const Expansion& e);
Json to_json(const IntPolynomial& p);
Json to_json(const SpectrumClassification& c);
Json to_json(const RealizabilityVerdict& v);
Json to_json(const Vertex& v);
Json to_json(const Attachment& a);
Json to_json(const RealizationReport& r, const ReidemeisterGraph& g);
Json to_json(const ValidatorReport& r);
Json to_json(const EqualityVerdict& v);
Json to_json(const NfNjdSummary& s);

/// Vertices (with index and flags) and prime-step edges.
Json graph_to_json(const ReidemeisterGraph& g);

/// One cluster per level; essential vertices double-circled, irreducible
/// ones bold; only prime-step edges l -> k (k/l prime) are drawn.
std::string dot_export(const ReidemeisterGraph& g);

}  // namespace nielsen

#ifndef ANTIMAGIC_IO_HPP
#define ANTIMAGIC_IO_HPP

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/pipeline.hpp"
#include "antimagic/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace antimagic {

using Json = nlohmann::json;

// Document schemas (rationals are "p" or "p/q" strings, edges are "u-v" keys):
//   weighting  {"weights": {"<vertex>": "p/q", ...}}
//   lists      {"lists": {"u-v": ["p/q", ...], ...}}
//   labeling   {"labels": {"u-v": "p/q"}, "orientation": {"u-v": "u>v" | "v>u"},
//               "k": int, "variant": string}
//   A labeling document may also carry "graph" (edge-list text), "weights",
//   "lists", "verify" and "trace"; the reader ignores them.
// Readers take the target graph and reject keys that do not belong to it;
// errors carry a JSON pointer to the offending value.

Json write_weighting(const Weighting& w);
Weighting read_weighting(const Json& doc, const Graph& g);

Json write_lists(const ListAssignment& lists);
ListAssignment read_lists(const Json& doc, const Graph& g);

struct LabelingDocument {
    Labeling labeling;
    std::optional<std::int64_t> k;
    std::string variant;
};

Json write_labeling(const Labeling& f, std::optional<std::int64_t> k = std::nullopt, const std::string& variant = {});
LabelingDocument read_labeling(const Json& doc, const Graph& g);

Json to_json(const VerifyReport& report);
/// {"mode":..., "n":..., "abc":[a,b,c], "coefficient":"<integer>", "nonzero":bool}
Json certificate_to_json(const CoefficientCertificate& cert, ReductionMode mode, unsigned n);
Json to_json(const CoefficientCertificate& cert);
Json to_json(const TraceRecord& record);

/// Parses text as JSON, turning syntax errors into ParseError.
Json parse_json(const std::string& text, const std::string& source);

/// Serialises with a stable layout (sorted keys, two-space indent, trailing newline).
std::string dump(const Json& doc);

} // namespace antimagic

#endif

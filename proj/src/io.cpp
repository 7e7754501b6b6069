#include "antimagic/io.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>
#include <charconv>

namespace antimagic {

namespace {

std::string pointer(const std::string& a, const std::string& b = {}) {
    // JSON pointer escaping for '~' and '/'.
    auto esc = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '~') out += "~0";
            else if (c == '/') out += "~1";
            else out += c;
        }
        return out;
    };
    return "/" + esc(a) + (b.empty() ? "" : "/" + esc(b));
}

const Json& require_object(const Json& doc, const std::string& key) {
    if (!doc.is_object()) throw ParseError("/", "document must be a JSON object");
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(pointer(key), "missing required key");
    if (!it->is_object()) throw ParseError(pointer(key), "must be an object");
    return *it;
}

Rational read_rational(const Json& value, const std::string& where) {
    if (!value.is_string()) throw ParseError(where, "rational must be a \"p/q\" string");
    return parse_rational(value.get<std::string>(), where);
}

VertexId read_vertex(const std::string& key, const std::string& where) {
    VertexId v{};
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc{} || ptr != key.data() + key.size() || key.empty())
        throw ParseError(where, "bad vertex id '" + key + "'");
    return v;
}

Edge read_edge(const std::string& key, const Graph& g, const std::string& where) {
    Edge e = parse_edge_key(key, where);
    if (!g.has_edge(e)) throw ValidationError(where, "edge " + key + " is not in the graph");
    return e;
}

void reject_unknown(const Json& doc, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : doc.items())
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw ParseError(pointer(key), "unexpected key");
}

} // namespace

Json write_weighting(const Weighting& w) {
    Json weights = Json::object();
    for (const auto& [v, x] : w.weights) weights[std::to_string(v)] = to_string(x);
    return Json{{"weights", weights}};
}

Weighting read_weighting(const Json& doc, const Graph& g) {
    const Json& weights = require_object(doc, "weights");
    reject_unknown(doc, {"weights"});
    Weighting w;
    for (const auto& [key, value] : weights.items()) {
        const std::string where = pointer("weights", key);
        const VertexId v = read_vertex(key, where);
        if (!g.has_vertex(v)) throw ValidationError(where, "vertex " + key + " is not in the graph");
        w.weights[v] = read_rational(value, where);
    }
    return w;
}

Json write_lists(const ListAssignment& lists) {
    Json out = Json::object();
    for (const auto& [e, values] : lists.lists) {
        Json arr = Json::array();
        for (const auto& x : values) arr.push_back(to_string(x));
        out[edge_key(e)] = std::move(arr);
    }
    return Json{{"lists", out}};
}

ListAssignment read_lists(const Json& doc, const Graph& g) {
    const Json& lists = require_object(doc, "lists");
    reject_unknown(doc, {"lists"});
    ListAssignment out;
    for (const auto& [key, value] : lists.items()) {
        const std::string where = pointer("lists", key);
        const Edge e = read_edge(key, g, where);
        if (out.lists.contains(e)) throw ValidationError(where, "edge listed twice");
        if (!value.is_array()) throw ParseError(where, "list must be an array");
        std::vector<Rational> values;
        for (std::size_t i = 0; i < value.size(); ++i)
            values.push_back(read_rational(value[i], where + "/" + std::to_string(i)));
        std::sort(values.begin(), values.end());
        if (auto dup = std::adjacent_find(values.begin(), values.end()); dup != values.end())
            throw ValidationError(where, "duplicate value " + to_string(*dup));
        out.lists[e] = std::move(values);
    }
    return out;
}

Json write_labeling(const Labeling& f, std::optional<std::int64_t> k, const std::string& variant) {
    Json labels = Json::object();
    for (const auto& [e, x] : f.labels) labels[edge_key(e)] = to_string(x);
    Json out{{"labels", labels}};
    if (f.orientation) {
        Json orientation = Json::object();
        for (const auto& [e, arc] : f.orientation->arcs())
            orientation[edge_key(e)] = std::to_string(arc.tail) + ">" + std::to_string(arc.head);
        out["orientation"] = std::move(orientation);
    }
    if (k) out["k"] = *k;
    if (!variant.empty()) out["variant"] = variant;
    return out;
}

LabelingDocument read_labeling(const Json& doc, const Graph& g) {
    const Json& labels = require_object(doc, "labels");
    reject_unknown(doc, {"labels", "orientation", "k", "variant", "verify", "trace", "graph", "weights", "lists"});
    LabelingDocument out;
    for (const auto& [key, value] : labels.items()) {
        const std::string where = pointer("labels", key);
        const Edge e = read_edge(key, g, where);
        out.labeling.labels[e] = read_rational(value, where);
    }
    if (doc.contains("orientation")) {
        const Json& orientation = require_object(doc, "orientation");
        Orientation o;
        for (const auto& [key, value] : orientation.items()) {
            const std::string where = pointer("orientation", key);
            const Edge e = read_edge(key, g, where);
            if (!value.is_string()) throw ParseError(where, "orientation must be a \"u>v\" string");
            const auto text = value.get<std::string>();
            const auto gt = text.find('>');
            if (gt == std::string::npos) throw ParseError(where, "orientation must be a \"u>v\" string");
            const VertexId tail = read_vertex(text.substr(0, gt), where);
            const VertexId head = read_vertex(text.substr(gt + 1), where);
            if (Edge(tail, head) != e || tail == head)
                throw ValidationError(where, "orientation '" + text + "' does not match edge " + key);
            o.set(e, Arc{tail, head});
        }
        out.labeling.orientation = std::move(o);
    }
    if (doc.contains("k")) {
        if (!doc["k"].is_number_integer()) throw ParseError("/k", "k must be an integer");
        out.k = doc["k"].get<std::int64_t>();
    }
    if (doc.contains("variant")) {
        if (!doc["variant"].is_string()) throw ParseError("/variant", "variant must be a string");
        out.variant = doc["variant"].get<std::string>();
    }
    return out;
}

Json to_json(const VerifyReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"kind", to_string(v.kind)}, {"pair", {v.first, v.second}}});
    return Json{{"ok", report.ok}, {"violations", violations}};
}

Json certificate_to_json(const CoefficientCertificate& cert, ReductionMode mode, unsigned n) {
    return Json{{"mode", to_string(mode)},
                {"n", n},
                {"abc", cert.exponents},
                {"coefficient", cert.coefficient.get_str()},
                {"nonzero", cert.nonzero}};
}

Json to_json(const CoefficientCertificate& cert) {
    return Json{{"provenance", cert.provenance},
                {"exponents", cert.exponents},
                {"coefficient", cert.coefficient.get_str()},
                {"nonzero", cert.nonzero}};
}

Json to_json(const TraceRecord& r) {
    Json out{{"stage", r.stage}, {"depth", r.depth}, {"edges", r.edges}};
    if (r.vertex) out["vertex"] = *r.vertex;
    if (!r.removed.empty()) {
        Json removed = Json::array();
        for (const auto& e : r.removed) removed.push_back(edge_key(e));
        out["removed"] = removed;
    }
    if (r.stage == "base-greedy") {
        out["greedy_steps"] = r.greedy_steps;
        out["max_forbidden"] = r.max_forbidden;
        out["forbidden_budget"] = r.forbidden_budget;
        out["odd_components"] = r.odd_components;
    }
    if (r.stage == "base-cn" || r.stage == "extend-cn") {
        out["variables"] = r.variables;
        out["nodes"] = r.nodes;
    }
    if (r.certificate) out["certificate"] = to_json(*r.certificate);
    return out;
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(source, e.what());
    }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

} // namespace antimagic

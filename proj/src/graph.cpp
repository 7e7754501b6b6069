#include "antimagic/graph.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace antimagic {

namespace {

std::optional<VertexId> parse_id(std::string_view s) {
    VertexId value{};
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

std::string edge_key(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Edge parse_edge_key(std::string_view key, const std::string& where) {
    // The separator is the first '-' that is not a leading sign.
    const auto sep = key.find('-', 1);
    if (sep == std::string_view::npos) throw ParseError(where, "malformed edge key '" + std::string(key) + "'");
    auto u = parse_id(key.substr(0, sep));
    auto v = parse_id(key.substr(sep + 1));
    if (!u || !v) throw ParseError(where, "malformed edge key '" + std::string(key) + "'");
    if (*u == *v) throw ValidationError(where, "loop edge '" + std::string(key) + "'");
    return Edge(*u, *v);
}

Graph Graph::from_edges(std::vector<Edge> edges, std::vector<VertexId> extra_vertices) {
    Graph g;
    std::set<VertexId> vs(extra_vertices.begin(), extra_vertices.end());
    for (const auto& e : edges) {
        if (e.u == e.v) throw ValidationError("", "loop at vertex " + std::to_string(e.u));
        vs.insert(e.u);
        vs.insert(e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw ValidationError("", "duplicate edge " + edge_key(*dup));
    g.vertices_.assign(vs.begin(), vs.end());
    g.edges_ = std::move(edges);
    for (VertexId v : g.vertices_) g.adjacency_[v];
    for (const auto& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& [v, nb] : g.adjacency_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_vertex(VertexId v) const { return adjacency_.contains(v); }

bool Graph::has_edge(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) throw ContractError("vertex " + std::to_string(v) + " is not in the graph");
    return it->second;
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (const auto& [v, nb] : adjacency_) d = std::max(d, nb.size());
    return d;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    std::set<Edge> drop(removed.begin(), removed.end());
    for (const auto& e : drop)
        if (!has_edge(e)) throw ContractError("cannot remove missing edge " + edge_key(e));
    for (const auto& e : edges_)
        if (!drop.contains(e)) kept.push_back(e);
    return from_edges(std::move(kept), vertices_);
}

std::vector<std::vector<VertexId>> Graph::components() const {
    std::vector<std::vector<VertexId>> out;
    std::set<VertexId> seen;
    for (VertexId root : vertices_) {
        if (seen.contains(root)) continue;
        std::vector<VertexId> comp{root};
        seen.insert(root);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId w : neighbors(comp[i]))
                if (seen.insert(w).second) comp.push_back(w);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph parse_graph(std::string_view text) {
    std::vector<Edge> edges;
    std::vector<VertexId> isolated;
    std::set<Edge> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (tokens.size() != 2) throw ParseError(where, "expected 'u v' or 'vertex u'");
        if (tokens[0] == "vertex") {
            auto v = parse_id(tokens[1]);
            if (!v) throw ParseError(where, "bad vertex id '" + std::string(tokens[1]) + "'");
            isolated.push_back(*v);
            continue;
        }
        auto u = parse_id(tokens[0]);
        auto v = parse_id(tokens[1]);
        if (!u || !v) throw ParseError(where, "bad vertex id");
        if (*u == *v) throw ValidationError(where, "loop at vertex " + std::to_string(*u));
        Edge e(*u, *v);
        if (!seen.insert(e).second) throw ValidationError(where, "duplicate edge " + edge_key(e));
        edges.push_back(e);
    }
    return Graph::from_edges(std::move(edges), std::move(isolated));
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    for (VertexId v : g.vertices())
        if (g.is_isolated(v)) out << "vertex " << v << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::vector<Edge> Component::walk_edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) out.emplace_back(walk[i], walk[i + 1]);
    if (is_cycle) out.emplace_back(walk.back(), walk.front());
    return out;
}

std::vector<Component> ComponentDecomposition::all_components() const {
    std::vector<Component> out;
    for (const auto& e : isolated_edges) {
        Component c;
        c.vertices = {e.u, e.v};
        c.walk = {e.u, e.v};
        c.is_path_or_cycle = true;
        out.push_back(std::move(c));
    }
    out.insert(out.end(), even_components.begin(), even_components.end());
    out.insert(out.end(), odd_components.begin(), odd_components.end());
    std::sort(out.begin(), out.end(),
              [](const Component& a, const Component& b) { return a.vertices.front() < b.vertices.front(); });
    return out;
}

namespace {

Component classify(const Graph& g, std::vector<VertexId> vertices) {
    Component c;
    c.vertices = std::move(vertices);
    std::size_t edge_ends = 0;
    bool deg_ok = true;
    std::vector<VertexId> ends;
    for (VertexId v : c.vertices) {
        const auto d = g.degree(v);
        edge_ends += d;
        if (d > 2) deg_ok = false;
        if (d == 1) ends.push_back(v);
    }
    if (!deg_ok) return c;
    const std::size_t m = edge_ends / 2;
    c.is_path_or_cycle = true;
    c.is_cycle = m == c.vertices.size();
    VertexId start = c.is_cycle ? c.vertices.front() : ends.front();
    c.walk.push_back(start);
    VertexId prev = start;
    VertexId cur = g.neighbors(start).front();
    while (cur != start) {
        c.walk.push_back(cur);
        const auto& nb = g.neighbors(cur);
        VertexId next = start;
        bool found = false;
        for (VertexId w : nb)
            if (w != prev) {
                next = w;
                found = true;
                break;
            }
        if (!found) break;  // path end
        prev = cur;
        cur = next;
    }
    return c;
}

} // namespace

ComponentDecomposition decompose(const Graph& g) {
    ComponentDecomposition d;
    for (auto& comp : g.components()) {
        if (comp.size() == 1) {
            d.isolated_vertices.push_back(comp.front());
        } else if (comp.size() == 2) {
            d.isolated_edges.emplace_back(comp[0], comp[1]);
        } else if (comp.size() % 2 == 0) {
            d.even_components.push_back(classify(g, std::move(comp)));
        } else {
            d.odd_components.push_back(classify(g, std::move(comp)));
        }
    }
    return d;
}

ComponentDecomposition decompose(const Graph& g, const Matching& m) {
    auto d = decompose(g);
    d.uncovered_vertices = m.uncovered;
    return d;
}

Matching max_matching_deg2(const Graph& g) {
    if (g.max_degree() > 2) throw ContractError("max_matching_deg2 requires maximum degree at most 2");
    const auto d = decompose(g);
    Matching out;
    for (const auto& c : d.all_components()) {
        const auto edges = c.walk_edges();
        const bool odd_cycle = c.is_cycle && c.size() % 2 == 1;
        // Walk edge i joins walk[i] and walk[i+1]; even-indexed edges form the
        // alternating matching, shifted by one for odd cycles so walk[0] (the
        // smallest id) is the vertex left uncovered.
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const bool matched = odd_cycle ? (i % 2 == 1 && i + 1 < edges.size()) : (i % 2 == 0);
            (matched ? out.edges : out.complement).push_back(edges[i]);
        }
        if (c.size() % 2 == 1) out.uncovered.push_back(odd_cycle ? c.walk.front() : c.walk.back());
    }
    return out;
}

std::optional<ThreePlusVertex> find_3plus_vertex(const Graph& g) {
    std::optional<VertexId> best;
    std::size_t best_degree = 2;
    for (VertexId v : g.vertices())
        if (g.degree(v) > best_degree) {
            best = v;
            best_degree = g.degree(v);
        }
    if (!best) return std::nullopt;
    ThreePlusVertex out;
    out.vertex = *best;
    const auto& nb = g.neighbors(*best);
    for (std::size_t i = 0; i < 3; ++i) {
        out.neighbors[i] = nb[i];
        out.edges[i] = Edge(*best, nb[i]);
    }
    return out;
}

} // namespace antimagic

#ifndef ANTIMAGIC_GRAPH_HPP
#define ANTIMAGIC_GRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antimagic {

using VertexId = std::int64_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    VertexId u{};
    VertexId v{};

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(VertexId x) const { return x == u || x == v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// "u-v" with u < v; the key format used by every JSON document.
std::string edge_key(const Edge& e);
Edge parse_edge_key(std::string_view key, const std::string& where = {});

/// Simple undirected graph on an arbitrary set of integer vertex ids.
/// Immutable once built; all iteration orders are ascending by id.
class Graph {
public:
    Graph() = default;

    /// Throws ValidationError on loops, parallel edges or undeclared endpoints.
    /// Endpoints of `edges` are added to the vertex set implicitly.
    static Graph from_edges(std::vector<Edge> edges, std::vector<VertexId> extra_vertices = {});

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const;
    bool has_edge(const Edge& e) const;

    /// Sorted neighbour list.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    std::size_t max_degree() const;
    bool is_isolated(VertexId v) const { return neighbors(v).empty(); }

    /// Same vertex set, listed edges removed. Every edge must be present.
    Graph without_edges(std::span<const Edge> removed) const;

    /// Connected components as sorted vertex lists, ordered by smallest id.
    std::vector<std::vector<VertexId>> components() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::map<VertexId, std::vector<VertexId>> adjacency_;
};

/// Reads the edge-list format: one "u v" pair per line, "vertex u" for
/// isolated vertices, '#' starts a comment.
Graph parse_graph(std::string_view text);

/// Canonical edge-list text: isolated vertices first, then sorted edges.
std::string write_graph(const Graph& g);

/// A connected component seen as a path or cycle (only meaningful when Δ ≤ 2).
/// `walk` lists the vertices in traversal order: a path starts at its lower-id
/// endpoint, a cycle starts at its smallest id and steps to the smaller of
/// that vertex's two neighbours.
struct Component {
    std::vector<VertexId> vertices;  // sorted
    std::vector<VertexId> walk;
    bool is_cycle = false;
    bool is_path_or_cycle = false;

    std::size_t size() const { return vertices.size(); }
    /// Edges in walk order (closing edge last for cycles).
    std::vector<Edge> walk_edges() const;
};

/// Components grouped by the size/parity classes used by the Δ ≤ 2 base cases.
struct ComponentDecomposition {
    std::vector<VertexId> isolated_vertices;
    std::vector<Edge> isolated_edges;            // K2 components
    std::vector<Component> even_components;      // even, >= 4 vertices
    std::vector<Component> odd_components;       // odd, >= 3 vertices
    std::vector<VertexId> uncovered_vertices;    // one per odd component, once a matching is chosen

    /// Every non-isolated component, ascending by smallest vertex id.
    std::vector<Component> all_components() const;
};

struct Matching {
    std::vector<Edge> edges;       // E'
    std::vector<Edge> complement;  // E''
    std::vector<VertexId> uncovered;
};

ComponentDecomposition decompose(const Graph& g);

/// Fills in `uncovered_vertices` from a matching built by max_matching_deg2.
ComponentDecomposition decompose(const Graph& g, const Matching& m);

/// Maximum matching of a graph with Δ ≤ 2, built per component by alternating
/// along the walk. Odd paths leave their higher-id endpoint uncovered, odd
/// cycles their smallest vertex. Edges of both E' and E'' are listed
/// component by component in walk order. Throws ContractError if Δ > 2.
Matching max_matching_deg2(const Graph& g);

struct ThreePlusVertex {
    VertexId vertex{};
    std::array<VertexId, 3> neighbors{};
    std::array<Edge, 3> edges{};
};

/// Smallest-id vertex of maximum degree, if that degree is at least 3, with
/// its three smallest neighbours.
std::optional<ThreePlusVertex> find_3plus_vertex(const Graph& g);

} // namespace antimagic

#endif

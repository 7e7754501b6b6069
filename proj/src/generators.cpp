#include "antimagic/generators.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace antimagic {

namespace {

VertexId id(std::size_t i) { return static_cast<VertexId>(i); }

std::vector<VertexId> vertex_range(std::size_t n) {
    std::vector<VertexId> out(n);
    std::iota(out.begin(), out.end(), VertexId{1});
    return out;
}

} // namespace

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(id(i), id(i + 1));
    return Graph::from_edges(std::move(edges), vertex_range(n));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ContractError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(id(i), id(i + 1));
    edges.emplace_back(id(n), 1);
    return Graph::from_edges(std::move(edges));
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) edges.emplace_back(id(i), id(j));
    return Graph::from_edges(std::move(edges), vertex_range(n));
}

Graph wheel_graph(std::size_t n) {
    if (n < 4) throw ContractError("a wheel needs at least 4 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 2; i <= n; ++i) {
        edges.emplace_back(1, id(i));
        edges.emplace_back(id(i), id(i == n ? 2 : i + 1));
    }
    return Graph::from_edges(std::move(edges));
}

Graph star_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 2; i <= n; ++i) edges.emplace_back(1, id(i));
    return Graph::from_edges(std::move(edges), vertex_range(n));
}

Graph random_graph(std::size_t n, double p, std::size_t max_degree, std::mt19937_64& rng) {
    std::vector<Edge> pairs;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(id(i), id(j));
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution keep(p);
    std::vector<std::size_t> degree(n + 1, 0);
    std::vector<Edge> edges;
    for (const auto& e : pairs) {
        const bool take = keep(rng);
        if (!take || degree[e.u] >= max_degree || degree[e.v] >= max_degree) continue;
        ++degree[e.u];
        ++degree[e.v];
        edges.push_back(e);
    }
    return Graph::from_edges(std::move(edges), vertex_range(n));
}

Graph generate(const std::string& family, std::size_t n, double p, std::size_t max_degree, std::uint64_t seed) {
    if (family == "path") return path_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "complete") return complete_graph(n);
    if (family == "wheel") return wheel_graph(n);
    if (family == "star") return star_graph(n);
    if (family == "random") {
        std::mt19937_64 rng(seed);
        return random_graph(n, p, max_degree, rng);
    }
    throw ContractError("unknown graph family '" + family + "'");
}

namespace {

bool connected_mask(std::uint32_t mask, std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
    std::uint32_t seen = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (!(mask >> b & 1U)) continue;
            const auto [i, j] = pairs[b];
            const bool hi = seen >> i & 1U;
            const bool hj = seen >> j & 1U;
            if (hi != hj) {
                seen |= (1U << i) | (1U << j);
                grew = true;
            }
        }
    }
    return seen == (n >= 32 ? ~0U : (1U << n) - 1);
}

} // namespace

std::vector<Graph> graph_catalog(std::size_t n, bool connected_only) {
    if (n == 0 || n > 7) throw ContractError("graph_catalog supports 1 <= n <= 7");
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> bit(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bit[i][j] = bit[j][i] = static_cast<int>(pairs.size());
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    const std::uint32_t total = 1U << pairs.size();
    std::vector<bool> seen(total, false);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (seen[mask]) continue;
        // Mark the whole orbit; the first mask reached is the smallest.
        for (const auto& pi : perms) {
            std::uint32_t image = 0;
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if (mask >> b & 1U) image |= 1U << bit[pi[pairs[b].first]][pi[pairs[b].second]];
            seen[image] = true;
        }
        if (connected_only && !connected_mask(mask, n, pairs)) continue;
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1U) edges.emplace_back(pairs[b].first + 1, pairs[b].second + 1);
        out.push_back(Graph::from_edges(std::move(edges), vertex_range(n)));
    }
    return out;
}

} // namespace antimagic

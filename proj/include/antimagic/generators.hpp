#ifndef ANTIMAGIC_GENERATORS_HPP
#define ANTIMAGIC_GENERATORS_HPP

#include "antimagic/graph.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace antimagic {

// All families use vertex ids 1..n.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Hub 1 joined to the cycle 2..n.
Graph wheel_graph(std::size_t n);
/// Centre 1 joined to leaves 2..n.
Graph star_graph(std::size_t n);
/// Each pair is tried once in random order and kept with probability p when
/// both endpoints still have degree below max_degree.
Graph random_graph(std::size_t n, double p, std::size_t max_degree, std::mt19937_64& rng);

/// Dispatch by family name: path, cycle, complete, wheel, star, random.
Graph generate(const std::string& family, std::size_t n, double p = 0.5, std::size_t max_degree = SIZE_MAX,
               std::uint64_t seed = 0);

/// One representative of every isomorphism class of graphs on exactly n
/// vertices (n <= 7), optionally only the connected ones. Representatives are
/// the lexicographically smallest adjacency encoding.
std::vector<Graph> graph_catalog(std::size_t n, bool connected_only);

} // namespace antimagic

#endif

#ifndef ANTIMAGIC_ORACLE_HPP
#define ANTIMAGIC_ORACLE_HPP

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace antimagic {

enum class OracleVariant {
    antimagic,                      // every pair of vertex sums distinct
    quasi_antimagic,                // isolated vertices and K2 pairs exempt
    weighted_list_quasi_antimagic,  // as quasi, intended for weights + lists
    oriented_antimagic,             // every pair of oriented sums distinct
    quasi_oriented_antimagic,       // isolated vertices exempt
};

enum class OracleMode { exists, find_one, count };

std::string to_string(OracleVariant v);
OracleVariant parse_oracle_variant(const std::string& name);
std::string to_string(OracleMode m);
OracleMode parse_oracle_mode(const std::string& name);

bool is_oriented(OracleVariant v);
Exemption exemption_of(OracleVariant v);

struct OracleQuery {
    Graph graph;
    OracleVariant variant = OracleVariant::antimagic;
    std::int64_t k = 0;
    Weighting weights;                          // undirected variants; zero by default
    std::optional<ListAssignment> lists;        // replaces the range {1, ..., m + k}
    std::optional<Orientation> fixed_orientation;  // oriented variants; otherwise all 2^m
    OracleMode mode = OracleMode::exists;
    /// Largest search space (assignments, times orientations) the oracle will take on.
    std::uint64_t cap = 100'000'000;
};

struct OracleResult {
    bool exists = false;
    std::optional<Labeling> witness;  // find_one / exists
    std::uint64_t count = 0;          // count mode
    std::uint64_t nodes = 0;
    Integer space;                    // size of the enumerated product
};

class OracleCapExceeded : public std::runtime_error {
public:
    OracleCapExceeded(const Integer& estimate, std::uint64_t cap);
    const Integer& estimate() const { return estimate_; }

private:
    Integer estimate_;
};

/// Raw size of the search space for a query (injective assignments times
/// orientations).
Integer oracle_search_space(const OracleQuery& q);

/// Exhaustive search over injective labelings (and orientations) with pruning
/// on vertex sums that are already final. Exact; throws OracleCapExceeded
/// before searching when the space is larger than the cap.
OracleResult brute_force(const OracleQuery& q);

struct SweepReport {
    std::optional<std::int64_t> min_k;  // absent: no k <= max_k worked for every sample
    std::size_t samples = 0;
    bool partial = false;               // some query hit the cap
    std::vector<std::size_t> successes; // successes[k] over the samples
};

/// Smallest k <= max_k for which the oracle finds a labeling for every sampled
/// weighting (sample 0 is the zero weighting). An empirical probe, not a proof.
SweepReport sweep_min_k(const Graph& g, OracleVariant variant, std::size_t trials, std::uint64_t seed,
                        std::int64_t max_k, std::uint64_t cap = 100'000'000);

} // namespace antimagic

#endif

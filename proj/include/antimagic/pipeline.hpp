#ifndef ANTIMAGIC_PIPELINE_HPP
#define ANTIMAGIC_PIPELINE_HPP

#include "antimagic/cn_search.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace antimagic {

enum class Variant { weighted_list_quasi_antimagic, quasi_oriented_antimagic };

std::string to_string(Variant v);
/// Accepts "weighted-list", "weighted-list-quasi-antimagic", "oriented",
/// "quasi-oriented-antimagic".
Variant parse_variant(const std::string& name);

/// floor(4n/3) for the weighted-list variant, floor(2n/3) for the oriented one.
std::int64_t theorem_k(std::size_t n, Variant v);

/// A search came back empty in a run that was not covered by a certificate
/// (k below the theorem bound). `solve` turns this into a failed result.
class SearchFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One record per reduction step or stage. Which fields are meaningful
/// depends on `stage`: "reduce", "base-greedy", "base-cn", "extend-cn".
struct TraceRecord {
    std::string stage;
    std::size_t depth = 0;
    std::size_t edges = 0;
    std::optional<VertexId> vertex;
    std::vector<Edge> removed;
    // base-greedy
    std::size_t greedy_steps = 0;
    std::size_t max_forbidden = 0;
    std::size_t forbidden_budget = 0;
    std::size_t odd_components = 0;
    // cn stages
    std::size_t variables = 0;
    std::uint64_t nodes = 0;
    std::optional<CoefficientCertificate> certificate;
};

struct StageOptions {
    SearchOptions search;
    /// A certificate covers this run, so an empty search is an internal error.
    bool guaranteed = true;
    std::size_t depth = 0;
    std::vector<TraceRecord>* trace = nullptr;
};

/// Δ ≤ 2 case, undirected. Stage 1 labels the complement of a maximum matching
/// greedily with the smallest admissible list value; stage 2 labels the
/// matching edges by constraint search over list prefixes sized by the
/// base-case certificate. Lists must cover every edge.
Labeling base_case_undirected(const Graph& g, const Weighting& w, const ListAssignment& lists,
                              const StageOptions& options = {});

/// Δ ≤ 2 case, oriented, labels in {1, ..., label_bound}. Starts from the
/// ascending orientation and flips the matching edges whose signed solution
/// is negative.
Labeling base_case_oriented(const Graph& g, std::int64_t label_bound, const StageOptions& options = {});

/// Parameters for re-adding the three edges at a 3+-vertex.
struct ExtensionInput {
    Variant variant = Variant::weighted_list_quasi_antimagic;
    const Weighting* weights = nullptr;        // undirected
    const ListAssignment* lists = nullptr;     // undirected
    std::int64_t label_bound = 0;              // oriented: m(g) + k
};

/// The 3-variable system used by extend_reduction, with candidate sets sized
/// from `cert`. Exposed so its linear factors can be compared with the
/// reduction polynomial.
ConstraintSystem extension_system(const Graph& g, const ThreePlusVertex& at, const Labeling& inner,
                                  const ExtensionInput& input, const CoefficientCertificate& cert,
                                  const StageOptions& options = {});

/// Extends a valid labeling of g minus `at.edges` to g. The vertex count of g
/// is the n of the reduction certificate.
Labeling extend_reduction(const Graph& g, const ThreePlusVertex& at, const Labeling& inner,
                          const ExtensionInput& input, const StageOptions& options = {});

/// The monomial the extension search sizes its candidate sets from: the
/// designated (a, b, c) when its coefficient is nonzero, otherwise the
/// top-degree monomial with nonzero coefficient and smallest largest exponent.
/// Memoised per (n, mode); safe to call concurrently.
CoefficientCertificate reduction_certificate(unsigned n, ReductionMode mode);

struct SolveRequest {
    Graph graph;
    Variant variant = Variant::weighted_list_quasi_antimagic;
    Weighting weights;
    /// Undirected only; defaults to {1, ..., m + k} on every edge.
    std::optional<ListAssignment> lists;
    std::optional<std::int64_t> k_override;
    SearchOptions search;
};

struct SolveResult {
    bool success = false;
    std::string failure;
    Labeling labeling;
    std::int64_t k = 0;
    std::vector<TraceRecord> trace;
    VerifyReport report;
};

/// Peels 3+-vertices until Δ ≤ 2, solves the base case, then re-adds the
/// removed edge triples in reverse order. With k at or above the theorem bound
/// a failure throws InternalCertificateError; below it, failures are reported
/// in the result. Throws InfeasibleInstance if a list is shorter than m + k.
SolveResult solve(const SolveRequest& request);

} // namespace antimagic

#endif

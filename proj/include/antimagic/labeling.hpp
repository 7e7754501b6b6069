#ifndef ANTIMAGIC_LABELING_HPP
#define ANTIMAGIC_LABELING_HPP

#include "antimagic/graph.hpp"
#include "antimagic/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace antimagic {

/// Vertex weights ω; vertices not listed weigh 0.
struct Weighting {
    std::map<VertexId, Rational> weights;

    Rational at(VertexId v) const {
        auto it = weights.find(v);
        return it == weights.end() ? Rational(0) : it->second;
    }
    friend bool operator==(const Weighting&, const Weighting&) = default;
};

/// Per-edge label lists L(e); each list is sorted ascending without repeats.
struct ListAssignment {
    std::map<Edge, std::vector<Rational>> lists;

    const std::vector<Rational>& at(const Edge& e) const;
    /// Smallest |L(e)| over the edges of g (0 if some edge has no list).
    std::size_t min_size(const Graph& g) const;
    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

/// Default lists {1, ..., bound} on every edge.
ListAssignment range_lists(const Graph& g, std::int64_t bound);

struct Arc {
    VertexId tail{};
    VertexId head{};
    friend bool operator==(const Arc&, const Arc&) = default;
};

class Orientation {
public:
    Orientation() = default;

    /// Every edge directed from its smaller id to its larger id.
    static Orientation ascending(const Graph& g);

    void set(const Edge& e, Arc a);
    void flip(const Edge& e);
    const Arc& at(const Edge& e) const;
    bool contains(const Edge& e) const { return arcs_.contains(e); }
    const std::map<Edge, Arc>& arcs() const { return arcs_; }

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    std::map<Edge, Arc> arcs_;
};

struct Labeling {
    std::map<Edge, Rational> labels;
    std::optional<Orientation> orientation;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

using VertexSums = std::map<VertexId, Rational>;

/// ω(v) plus the labels of the edges at v. Throws ContractError when an edge
/// of g has no label.
VertexSums vertex_sums(const Graph& g, const Labeling& f, const Weighting& w = {});

/// Labels of edges pointing into v minus labels of edges leaving v.
/// Throws ContractError when the labeling is partial or has no orientation.
VertexSums oriented_vertex_sums(const Graph& g, const Labeling& f);

enum class SumMode { undirected, oriented };

/// Which vertex pairs may share a sum.
///  - none:          every pair must differ (plain antimagic definitions)
///  - quasi:         isolated vertices are exempt; undirected mode also exempts
///                  the two endpoints of a K2 component from each other only
///  - quasi_relaxed: as quasi, but undirected K2 endpoints are exempt entirely
enum class Exemption { none, quasi, quasi_relaxed };

enum class ViolationKind { duplicate_label, label_out_of_range, label_not_in_list, sum_collision, missing_label };

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind{};
    std::string first;   // edge key or vertex id
    std::string second;  // edge key, vertex id, or offending label
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(Violation v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

struct VerifyOptions {
    SumMode mode = SumMode::undirected;
    Exemption exemption = Exemption::quasi;
    /// Labels must be integers in {1, ..., label_bound} when set.
    std::optional<std::int64_t> label_bound;
    /// Labels must come from these lists when set (checked in addition to the bound).
    const ListAssignment* lists = nullptr;
};

/// Checks injectivity, label ranges or lists, and pairwise distinctness of
/// (weighted or oriented) vertex sums under the chosen exemption rule.
/// Never throws on a bad labeling; every problem lands in the report.
VerifyReport verify_labeling(const Graph& g, const Labeling& f, const Weighting& w, const VerifyOptions& options);

/// The quasi-antimagic check used throughout: undirected mode takes weights
/// and optional lists, oriented mode ignores weights.
VerifyReport verify_quasi_antimagic(const Graph& g, const Labeling& f, const Weighting& w, SumMode mode,
                                    std::optional<std::int64_t> label_bound, const ListAssignment* lists = nullptr,
                                    Exemption exemption = Exemption::quasi);

} // namespace antimagic

#endif

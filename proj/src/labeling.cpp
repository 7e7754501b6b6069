#include "antimagic/labeling.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>
#include <set>

namespace antimagic {

const std::vector<Rational>& ListAssignment::at(const Edge& e) const {
    auto it = lists.find(e);
    if (it == lists.end()) throw ContractError("no list for edge " + edge_key(e));
    return it->second;
}

std::size_t ListAssignment::min_size(const Graph& g) const {
    std::size_t best = g.edge_count() == 0 ? 0 : SIZE_MAX;
    for (const auto& e : g.edges()) {
        auto it = lists.find(e);
        best = std::min(best, it == lists.end() ? std::size_t{0} : it->second.size());
    }
    return best;
}

ListAssignment range_lists(const Graph& g, std::int64_t bound) {
    ListAssignment out;
    std::vector<Rational> values;
    for (std::int64_t i = 1; i <= bound; ++i) values.emplace_back(static_cast<long>(i));
    for (const auto& e : g.edges()) out.lists[e] = values;
    return out;
}

Orientation Orientation::ascending(const Graph& g) {
    Orientation o;
    for (const auto& e : g.edges()) o.arcs_[e] = Arc{e.u, e.v};
    return o;
}

void Orientation::set(const Edge& e, Arc a) {
    if (Edge(a.tail, a.head) != e) throw ContractError("arc does not match edge " + edge_key(e));
    arcs_[e] = a;
}

void Orientation::flip(const Edge& e) {
    auto& a = arcs_.at(e);
    std::swap(a.tail, a.head);
}

const Arc& Orientation::at(const Edge& e) const {
    auto it = arcs_.find(e);
    if (it == arcs_.end()) throw ContractError("edge " + edge_key(e) + " has no orientation");
    return it->second;
}

namespace {

const Rational& label_of(const Labeling& f, const Edge& e) {
    auto it = f.labels.find(e);
    if (it == f.labels.end()) throw ContractError("edge " + edge_key(e) + " is unlabeled");
    return it->second;
}

} // namespace

VertexSums vertex_sums(const Graph& g, const Labeling& f, const Weighting& w) {
    VertexSums sums;
    for (VertexId v : g.vertices()) sums[v] = w.at(v);
    for (const auto& e : g.edges()) {
        const auto& x = label_of(f, e);
        sums[e.u] += x;
        sums[e.v] += x;
    }
    return sums;
}

VertexSums oriented_vertex_sums(const Graph& g, const Labeling& f) {
    if (!f.orientation) throw ContractError("oriented sums need an orientation");
    VertexSums sums;
    for (VertexId v : g.vertices()) sums[v] = 0;
    for (const auto& e : g.edges()) {
        const auto& x = label_of(f, e);
        const auto& arc = f.orientation->at(e);
        sums[arc.head] += x;
        sums[arc.tail] -= x;
    }
    return sums;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::duplicate_label: return "duplicate-label";
    case ViolationKind::label_out_of_range: return "label-out-of-range";
    case ViolationKind::label_not_in_list: return "label-not-in-list";
    case ViolationKind::sum_collision: return "sum-collision";
    case ViolationKind::missing_label: return "missing-label";
    }
    return "unknown";
}

VerifyReport verify_labeling(const Graph& g, const Labeling& f, const Weighting& w, const VerifyOptions& options) {
    VerifyReport report;

    bool total = true;
    for (const auto& e : g.edges())
        if (!f.labels.contains(e)) {
            report.add({ViolationKind::missing_label, edge_key(e), ""});
            total = false;
        }
    if (options.mode == SumMode::oriented)
        for (const auto& e : g.edges())
            if (!f.orientation || !f.orientation->contains(e)) {
                report.add({ViolationKind::missing_label, edge_key(e), "orientation"});
                total = false;
            }

    // Injectivity: group edges by label.
    std::map<Rational, std::vector<Edge>> by_label;
    for (const auto& [e, x] : f.labels)
        if (g.has_edge(e)) by_label[x].push_back(e);
    for (const auto& [x, es] : by_label)
        for (std::size_t i = 1; i < es.size(); ++i)
            report.add({ViolationKind::duplicate_label, edge_key(es[0]), edge_key(es[i])});

    for (const auto& [e, x] : f.labels) {
        if (!g.has_edge(e)) continue;
        if (options.label_bound && (!is_integer(x) || x < 1 || x > Rational(static_cast<long>(*options.label_bound))))
            report.add({ViolationKind::label_out_of_range, edge_key(e), to_string(x)});
        if (options.lists) {
            auto it = options.lists->lists.find(e);
            if (it == options.lists->lists.end() || !std::binary_search(it->second.begin(), it->second.end(), x))
                report.add({ViolationKind::label_not_in_list, edge_key(e), to_string(x)});
        }
    }
    if (!total) return report;

    const VertexSums sums = options.mode == SumMode::oriented ? oriented_vertex_sums(g, f) : vertex_sums(g, f, w);

    auto in_k2 = [&](VertexId v) { return g.degree(v) == 1 && g.degree(g.neighbors(v).front()) == 1; };
    auto participates = [&](VertexId v) {
        if (options.exemption == Exemption::none) return true;
        if (g.is_isolated(v)) return false;
        if (options.exemption == Exemption::quasi_relaxed && options.mode == SumMode::undirected && in_k2(v))
            return false;
        return true;
    };
    auto pair_exempt = [&](VertexId a, VertexId b) {
        return options.exemption == Exemption::quasi && options.mode == SumMode::undirected && in_k2(a) &&
               g.neighbors(a).front() == b;
    };

    std::map<Rational, std::vector<VertexId>> by_sum;
    for (const auto& [v, s] : sums)
        if (participates(v)) by_sum[s].push_back(v);
    for (const auto& [s, vs] : by_sum)
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!pair_exempt(vs[i], vs[j]))
                    report.add({ViolationKind::sum_collision, std::to_string(vs[i]), std::to_string(vs[j])});
    return report;
}

VerifyReport verify_quasi_antimagic(const Graph& g, const Labeling& f, const Weighting& w, SumMode mode,
                                    std::optional<std::int64_t> label_bound, const ListAssignment* lists,
                                    Exemption exemption) {
    VerifyOptions options;
    options.mode = mode;
    options.exemption = exemption;
    options.label_bound = label_bound;
    options.lists = lists;
    return verify_labeling(g, f, mode == SumMode::oriented ? Weighting{} : w, options);
}

} // namespace antimagic

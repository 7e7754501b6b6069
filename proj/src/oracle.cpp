#include "antimagic/oracle.hpp"

#include "antimagic/errors.hpp"
#include "antimagic/sampling.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace antimagic {

std::string to_string(OracleVariant v) {
    switch (v) {
    case OracleVariant::antimagic: return "antimagic";
    case OracleVariant::quasi_antimagic: return "quasi-antimagic";
    case OracleVariant::weighted_list_quasi_antimagic: return "weighted-list-quasi-antimagic";
    case OracleVariant::oriented_antimagic: return "oriented-antimagic";
    case OracleVariant::quasi_oriented_antimagic: return "quasi-oriented-antimagic";
    }
    return "unknown";
}

OracleVariant parse_oracle_variant(const std::string& name) {
    if (name == "antimagic") return OracleVariant::antimagic;
    if (name == "quasi" || name == "quasi-antimagic") return OracleVariant::quasi_antimagic;
    if (name == "weighted-list" || name == "weighted-list-quasi-antimagic")
        return OracleVariant::weighted_list_quasi_antimagic;
    if (name == "oriented-antimagic") return OracleVariant::oriented_antimagic;
    if (name == "oriented" || name == "quasi-oriented" || name == "quasi-oriented-antimagic")
        return OracleVariant::quasi_oriented_antimagic;
    throw ContractError("unknown oracle variant '" + name + "'");
}

std::string to_string(OracleMode m) {
    switch (m) {
    case OracleMode::exists: return "exists";
    case OracleMode::find_one: return "find-one";
    case OracleMode::count: return "count";
    }
    return "unknown";
}

OracleMode parse_oracle_mode(const std::string& name) {
    if (name == "exists") return OracleMode::exists;
    if (name == "find-one") return OracleMode::find_one;
    if (name == "count") return OracleMode::count;
    throw ContractError("unknown oracle mode '" + name + "'");
}

bool is_oriented(OracleVariant v) {
    return v == OracleVariant::oriented_antimagic || v == OracleVariant::quasi_oriented_antimagic;
}

Exemption exemption_of(OracleVariant v) {
    return v == OracleVariant::antimagic || v == OracleVariant::oriented_antimagic ? Exemption::none
                                                                                    : Exemption::quasi;
}

OracleCapExceeded::OracleCapExceeded(const Integer& estimate, std::uint64_t cap)
    : std::runtime_error("oracle search space " + estimate.get_str() + " exceeds cap " + std::to_string(cap)),
      estimate_(estimate) {}

namespace {

struct Problem {
    std::vector<Edge> edges;
    std::vector<Rational> pool;                    // all distinct candidate values
    std::vector<std::vector<std::size_t>> values;  // per edge, indices into pool
    std::map<VertexId, std::size_t> index;
    std::vector<VertexId> vertices;
    std::vector<Rational> base;                    // initial sums (weights)
    std::vector<std::size_t> degree;
    std::vector<bool> participates;
    std::vector<std::optional<std::size_t>> k2_partner;
    bool oriented = false;
    bool free_orientation = false;
    std::vector<Arc> fixed;
};

Problem build(const OracleQuery& q) {
    const Graph& g = q.graph;
    Problem p;
    p.edges = g.edges();
    p.oriented = is_oriented(q.variant);
    p.free_orientation = p.oriented && !q.fixed_orientation;
    if (p.oriented && q.fixed_orientation)
        for (const auto& e : p.edges) p.fixed.push_back(q.fixed_orientation->at(e));

    std::vector<std::vector<Rational>> raw;
    const auto m = static_cast<std::int64_t>(g.edge_count());
    for (const auto& e : p.edges) {
        if (q.lists) {
            raw.push_back(q.lists->at(e));
        } else {
            std::vector<Rational> r;
            for (std::int64_t i = 1; i <= m + q.k; ++i) r.emplace_back(static_cast<long>(i));
            raw.push_back(std::move(r));
        }
        p.pool.insert(p.pool.end(), raw.back().begin(), raw.back().end());
    }
    std::sort(p.pool.begin(), p.pool.end());
    p.pool.erase(std::unique(p.pool.begin(), p.pool.end()), p.pool.end());
    for (const auto& r : raw) {
        std::vector<std::size_t> idx;
        for (const auto& x : r)
            idx.push_back(static_cast<std::size_t>(std::lower_bound(p.pool.begin(), p.pool.end(), x) - p.pool.begin()));
        p.values.push_back(std::move(idx));
    }

    const Exemption ex = exemption_of(q.variant);
    for (VertexId v : g.vertices()) {
        p.index[v] = p.vertices.size();
        p.vertices.push_back(v);
        p.base.push_back(p.oriented ? Rational(0) : q.weights.at(v));
        p.degree.push_back(g.degree(v));
        p.participates.push_back(ex == Exemption::none || !g.is_isolated(v));
    }
    p.k2_partner.resize(p.vertices.size());
    if (ex == Exemption::quasi && !p.oriented)
        for (VertexId v : g.vertices())
            if (g.degree(v) == 1 && g.degree(g.neighbors(v).front()) == 1)
                p.k2_partner[p.index[v]] = p.index[g.neighbors(v).front()];
    return p;
}

class Search {
public:
    Search(const Problem& p, OracleMode mode) : p_(p), mode_(mode) {
        sums_ = p.base;
        remaining_ = p.degree;
        used_.assign(p.pool.size(), false);
        choice_.resize(p.edges.size());
        arcs_.resize(p.edges.size());
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            if (remaining_[v] == 0 && p.participates[v]) done_.push_back(v);
    }

    void run() {
        // Isolated vertices are final from the start.
        for (std::size_t i = 0; i < done_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (clash(done_[i], done_[j])) return;
        recurse(0);
    }

    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    std::optional<Labeling> witness;

private:
    bool clash(std::size_t a, std::size_t b) const {
        if (p_.k2_partner[a] && *p_.k2_partner[a] == b) return false;
        return sums_[a] == sums_[b];
    }

    // Vertex a just became final; compare it with every earlier final vertex.
    bool finalize(std::size_t a) {
        if (!p_.participates[a]) return true;
        for (std::size_t b : done_)
            if (clash(a, b)) return false;
        done_.push_back(a);
        return true;
    }

    bool stop() const { return mode_ != OracleMode::count && witness.has_value(); }

    void recurse(std::size_t depth) {
        if (depth == p_.edges.size()) {
            ++count;
            if (mode_ != OracleMode::count) {
                Labeling f;
                if (p_.oriented) f.orientation = Orientation{};
                for (std::size_t i = 0; i < p_.edges.size(); ++i) {
                    f.labels[p_.edges[i]] = p_.pool[choice_[i]];
                    if (p_.oriented) f.orientation->set(p_.edges[i], arcs_[i]);
                }
                witness = std::move(f);
            }
            return;
        }
        const Edge& e = p_.edges[depth];
        const std::size_t a = p_.index.at(e.u);
        const std::size_t b = p_.index.at(e.v);
        const int directions = p_.free_orientation ? 2 : 1;
        for (std::size_t idx : p_.values[depth]) {
            if (used_[idx]) continue;
            for (int dir = 0; dir < directions; ++dir) {
                ++nodes;
                const Rational& x = p_.pool[idx];
                Arc arc{e.u, e.v};
                if (p_.oriented) {
                    arc = p_.free_orientation ? (dir == 0 ? Arc{e.u, e.v} : Arc{e.v, e.u}) : p_.fixed[depth];
                }
                const std::size_t head = p_.index.at(arc.head);
                const std::size_t tail = p_.index.at(arc.tail);
                if (p_.oriented) {
                    sums_[head] += x;
                    sums_[tail] -= x;
                } else {
                    sums_[a] += x;
                    sums_[b] += x;
                }
                used_[idx] = true;
                choice_[depth] = idx;
                arcs_[depth] = arc;
                --remaining_[a];
                --remaining_[b];
                const std::size_t mark = done_.size();
                bool ok = true;
                if (remaining_[a] == 0) ok = finalize(a);
                if (ok && remaining_[b] == 0) ok = finalize(b);
                if (ok) recurse(depth + 1);
                done_.resize(mark);
                ++remaining_[a];
                ++remaining_[b];
                used_[idx] = false;
                if (p_.oriented) {
                    sums_[head] -= x;
                    sums_[tail] += x;
                } else {
                    sums_[a] -= x;
                    sums_[b] -= x;
                }
                if (stop()) return;
            }
        }
    }

    const Problem& p_;
    OracleMode mode_;
    std::vector<Rational> sums_;
    std::vector<std::size_t> remaining_;
    std::vector<bool> used_;
    std::vector<std::size_t> choice_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> done_;
};

} // namespace

Integer oracle_search_space(const OracleQuery& q) {
    const Problem p = build(q);
    Integer space = 1;
    if (q.lists) {
        for (const auto& v : p.values) space *= static_cast<unsigned long>(v.size());
    } else {
        const auto pool = static_cast<long>(p.pool.size());
        for (long i = 0; i < static_cast<long>(p.edges.size()); ++i) space *= std::max(pool - i, 0L);
    }
    if (p.free_orientation) space <<= static_cast<mp_bitcnt_t>(p.edges.size());
    return space;
}

OracleResult brute_force(const OracleQuery& q) {
    OracleResult out;
    out.space = oracle_search_space(q);
    if (out.space > Integer(std::to_string(q.cap))) throw OracleCapExceeded(out.space, q.cap);

    const Problem p = build(q);
    Search search(p, q.mode);
    search.run();
    out.nodes = search.nodes;
    out.count = search.count;
    out.exists = search.count > 0;
    out.witness = std::move(search.witness);

    if (out.witness) {
        VerifyOptions options;
        options.mode = p.oriented ? SumMode::oriented : SumMode::undirected;
        options.exemption = exemption_of(q.variant);
        if (q.lists)
            options.lists = &*q.lists;
        else
            options.label_bound = static_cast<std::int64_t>(q.graph.edge_count()) + q.k;
        const auto report = verify_labeling(q.graph, *out.witness, p.oriented ? Weighting{} : q.weights, options);
        if (!report.ok) throw std::logic_error("oracle witness failed verification");
    }
    return out;
}

SweepReport sweep_min_k(const Graph& g, OracleVariant variant, std::size_t trials, std::uint64_t seed,
                        std::int64_t max_k, std::uint64_t cap) {
    SweepReport report;
    std::mt19937_64 rng(seed);
    std::vector<Weighting> samples{Weighting{}};
    if (!is_oriented(variant))
        for (std::size_t t = 1; t < trials; ++t) samples.push_back(sample_adversarial_weighting(g, rng));
    report.samples = samples.size();

    for (std::int64_t k = 0; k <= max_k; ++k) {
        std::size_t ok = 0;
        for (const auto& w : samples) {
            OracleQuery q;
            q.graph = g;
            q.variant = variant;
            q.k = k;
            q.weights = w;
            q.cap = cap;
            try {
                if (brute_force(q).exists) ++ok;
            } catch (const OracleCapExceeded&) {
                report.partial = true;
            }
        }
        report.successes.push_back(ok);
        if (ok == samples.size()) {
            report.min_k = k;
            break;
        }
        if (report.partial) break;
    }
    return report;
}

} // namespace antimagic

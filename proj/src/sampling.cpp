#include "antimagic/sampling.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

namespace antimagic {

namespace {

Rational small_rational(std::mt19937_64& rng, long spread) {
    std::uniform_int_distribution<long> num(-spread, spread);
    std::uniform_int_distribution<long> den(1, 3);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

} // namespace

Weighting sample_adversarial_weighting(const Graph& g, std::mt19937_64& rng) {
    Weighting w;
    const long spread = 3 * static_cast<long>(g.edge_count()) + 3;
    const bool by_degree = std::bernoulli_distribution(0.5)(rng);
    std::map<std::size_t, Rational> per_degree;
    for (VertexId v : g.vertices()) {
        if (by_degree) {
            auto [it, fresh] = per_degree.try_emplace(g.degree(v));
            if (fresh) it->second = small_rational(rng, spread);
            w.weights[v] = it->second;
        } else {
            w.weights[v] = small_rational(rng, spread);
        }
    }
    return w;
}

ListAssignment sample_adversarial_lists(const Graph& g, std::size_t size, std::mt19937_64& rng, std::size_t slack) {
    std::set<Rational> pool;
    const long spread = static_cast<long>(size + slack) + 2;
    while (pool.size() < size + slack) pool.insert(small_rational(rng, spread));
    const std::vector<Rational> values(pool.begin(), pool.end());
    ListAssignment lists;
    for (const auto& e : g.edges()) {
        std::vector<Rational> pick;
        std::sample(values.begin(), values.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(size), rng);
        std::sort(pick.begin(), pick.end());
        lists.lists[e] = std::move(pick);
    }
    return lists;
}

} // namespace antimagic

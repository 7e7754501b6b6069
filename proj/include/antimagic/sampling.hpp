#ifndef ANTIMAGIC_SAMPLING_HPP
#define ANTIMAGIC_SAMPLING_HPP

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

#include <cstddef>
#include <random>

namespace antimagic {

/// Small-denominator rational weights. About half the samples give every
/// vertex of the same degree the same weight, the hard case for distinct sums.
Weighting sample_adversarial_weighting(const Graph& g, std::mt19937_64& rng);

/// Lists of exactly `size` values per edge, all drawn from one shared pool of
/// size + slack small-denominator rationals, so lists overlap heavily.
ListAssignment sample_adversarial_lists(const Graph& g, std::size_t size, std::mt19937_64& rng,
                                        std::size_t slack = 2);

} // namespace antimagic

#endif

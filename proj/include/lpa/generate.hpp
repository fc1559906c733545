#pragma once

#include <cstdint>
#include <random>

#include "lpa/graded_ideal.hpp"

namespace lpa {

struct GraphGenOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 8;
  double edge_probability = 0.3;
  /// Chance that a bundle gets multiplicity 2 or 3.
  double multi_probability = 0.1;
  /// Chance that a bundle is infinite; 0 keeps the graph row-finite.
  double infinite_probability = 0.0;
};

/// Random graph on vertices "a", "b", ... with at most one bundle per pair.
Graph random_graph(std::mt19937_64& rng, const GraphGenOptions& options = {});

/// Uniform choice of ideals on the join-irreducibles of T_E, extended to a
/// saturated function. Ideals of ℤ are drawn from a small divisor-closed pool.
SaturatedFn random_saturated_fn(const PairLattice& lattice, const RingSpec& ring,
                                std::mt19937_64& rng);

/// A saturated function with values in {0, R}.
SaturatedFn random_basic_fn(const PairLattice& lattice, const RingSpec& ring, std::mt19937_64& rng);

}  // namespace lpa

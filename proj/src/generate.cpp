#include "lpa/generate.hpp"

namespace lpa {

namespace {

std::vector<PrincipalIdeal> ideal_pool(const RingSpec& ring) {
  std::vector<PrincipalIdeal> pool;
  if (ring.kind() == RingSpec::Kind::Integers) {
    for (std::uint64_t g : {0, 1, 2, 3, 4, 6, 12}) pool.emplace_back(ring, g);
  } else {
    for (auto d : divisors(ring.modulus())) pool.emplace_back(ring, d);
  }
  return pool;
}

SaturatedFn from_pool(const PairLattice& lattice, const RingSpec& ring,
                      const std::vector<PrincipalIdeal>& pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<PrincipalIdeal> values;
  for (std::size_t i = 0, n = join_irreducibles(lattice).size(); i < n; ++i)
    values.push_back(pool[pick(rng)]);
  return saturated_from_irreducibles(lattice, ring, values);
}

}  // namespace

Graph random_graph(std::mt19937_64& rng, const GraphGenOptions& options) {
  std::uniform_int_distribution<std::size_t> size(options.min_vertices, options.max_vertices);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> copies(2, 3);
  const std::size_t n = size(rng);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.emplace_back(1, static_cast<char>('a' + i));
  std::vector<EdgeSpec> edges;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t d = 0; d < n; ++d) {
      if (coin(rng) >= options.edge_probability) continue;
      Multiplicity m(1);
      if (coin(rng) < options.infinite_probability) {
        m = Multiplicity::infinite();
      } else if (coin(rng) < options.multi_probability) {
        m = Multiplicity(copies(rng));
      }
      edges.push_back(EdgeSpec{"e" + vertices[s] + vertices[d], vertices[s], vertices[d], m});
    }
  return Graph(std::move(vertices), std::move(edges), "G");
}

SaturatedFn random_saturated_fn(const PairLattice& lattice, const RingSpec& ring,
                                std::mt19937_64& rng) {
  return from_pool(lattice, ring, ideal_pool(ring), rng);
}

SaturatedFn random_basic_fn(const PairLattice& lattice, const RingSpec& ring, std::mt19937_64& rng) {
  return from_pool(lattice, ring, {PrincipalIdeal::zero(ring), PrincipalIdeal::whole(ring)}, rng);
}

}  // namespace lpa

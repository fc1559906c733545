#pragma once

#include <random>
#include <string>
#include <vector>

#include "lpa/generate.hpp"
#include "lpa/graded_ideal.hpp"
#include "lpa/graph.hpp"

namespace lpa::test {

inline Graph toeplitz() {
  return Graph({"u", "v"}, {{"c", "u", "u", Multiplicity(1)}, {"e", "u", "v", Multiplicity(1)}}, "T");
}

// Loop c at u and an infinite bundle e: u -> v.
inline Graph larki() {
  return Graph({"u", "v"},
               {{"c", "u", "u", Multiplicity(1)}, {"e", "u", "v", Multiplicity::infinite()}});
}

// u -> v1 -> {v2, v3}.
inline Graph branching() {
  return Graph({"u", "v1", "v2", "v3"}, {{"e1", "u", "v1", Multiplicity(1)},
                                         {"e2", "v1", "v2", Multiplicity(1)},
                                         {"e3", "v1", "v3", Multiplicity(1)}});
}

inline Graph single_loop() { return Graph({"u"}, {{"c", "u", "u", Multiplicity(1)}}); }

inline Graph isolated(std::size_t n) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("x" + std::to_string(i));
  return Graph(vs, {});
}

// Row-finite random graphs of 1..max_vertices vertices, reproducible from seed.
inline std::vector<Graph> random_graphs(std::uint64_t seed, std::size_t count,
                                        std::size_t max_vertices, double infinite_probability = 0.0) {
  std::mt19937_64 rng(seed);
  GraphGenOptions o;
  o.max_vertices = max_vertices;
  o.infinite_probability = infinite_probability;
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_real_distribution<double> density(0.1, 0.5);
    o.edge_probability = density(rng);
    out.push_back(random_graph(rng, o));
  }
  return out;
}

// Every subset of E^0 as a VertexSet.
inline std::vector<VertexSet> all_subsets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    out.emplace_back(n, mask);
  return out;
}

struct PairValue {
  std::vector<std::string> h;
  std::vector<std::string> s;
  std::uint64_t gen;
};

// f from (H, S, generator) triples over T_E*.
inline SaturatedFn make_f(const PairLattice& l, const RingSpec& r, const std::vector<PairValue>& entries) {
  const auto& g = l.graph();
  std::vector<std::pair<AdmissiblePair, PrincipalIdeal>> a;
  for (const auto& e : entries)
    a.emplace_back(AdmissiblePair{g.make_set(e.h), g.make_set(e.s)}, PrincipalIdeal(r, e.gen));
  return make_saturated_fn(l, r, a);
}

// φ on the plain vertices of a row-finite graph.
inline GradedIdealFn vertex_phi(const PairLattice& l, const RingSpec& r,
                                const std::vector<std::pair<std::string, std::uint64_t>>& values) {
  std::vector<std::pair<ExtendedVertex, PrincipalIdeal>> a;
  for (const auto& [v, gen] : values)
    a.emplace_back(ExtendedVertex{l.graph().vertex(v), std::nullopt}, PrincipalIdeal(r, gen));
  return make_graded_ideal_fn(l, r, a);
}

}  // namespace lpa::test

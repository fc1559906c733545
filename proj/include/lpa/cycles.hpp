#pragma once

#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// A closed path visiting no vertex twice, rotated so that its smallest
/// vertex comes first. Since a graph holds at most one bundle per vertex
/// pair, the vertex sequence determines the bundles.
struct Cycle {
  std::vector<VertexId> vertices;  // s(e_1), ..., s(e_n)
  std::vector<EdgeId> edges;       // edges[i] goes vertices[i] -> vertices[i+1 mod n]
  /// Number of distinct simple closed paths realising this cycle: the
  /// product of bundle multiplicities (infinite if any bundle is).
  Multiplicity copies{1};

  VertexId base() const { return vertices.front(); }
  std::size_t length() const { return vertices.size(); }

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
  }
};

/// Saturating count of simple closed paths based at a vertex.
enum class PathCount { Zero, One, Many };

/// All cycles up to rotation, ordered lexicographically by vertex sequence.
std::vector<Cycle> enumerate_cycles(const Graph& g);

/// Simple closed paths based at v (returning to v only at the end).
/// Multiplicity m counts as m edges; an infinite bundle forces Many.
PathCount count_simple_closed_paths(const Graph& g, VertexId v);

/// Bundles carrying an exit of c. A bundle of the cycle itself is listed
/// when its multiplicity is >= 2, since its extra copies leave the cycle.
std::vector<EdgeId> exits(const Graph& g, const Cycle& c);

bool condition_L(const Graph& g);
bool condition_K(const Graph& g);

/// C_u(E): cycles whose base carries exactly one simple closed path.
std::vector<Cycle> cu_cycles(const Graph& g);

/// Checks that c describes a cycle of g; throws std::invalid_argument otherwise.
void require_cycle(const Graph& g, const Cycle& c);

/// Builds the canonical Cycle through the given vertex sequence.
Cycle make_cycle(const Graph& g, std::vector<VertexId> vertices);

/// c_down: hereditary saturated closure of the ranges of the exits of c.
VertexSet cycle_downset(const Graph& g, const Cycle& c);

}  // namespace lpa

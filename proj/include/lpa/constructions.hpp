#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/ideal.hpp"
#include "lpa/lattice.hpp"

namespace lpa {

/// E \ (H,S), with every new vertex and edge mapped back to its origin in E.
struct QuotientGraph {
  Graph graph;
  std::map<std::string, std::string> vertex_origin;
  std::map<std::string, std::string> edge_origin;
};

/// Throws std::invalid_argument when p is not an admissible pair of g.
QuotientGraph quotient_graph(const Graph& g, const AdmissiblePair& p);

/// One edge of a path. copy is 0 for a multiplicity-1 bundle, otherwise the
/// 1-based index of the parallel edge inside its bundle.
struct PathStep {
  EdgeId edge = 0;
  std::uint64_t copy = 0;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};
using Path = std::vector<PathStep>;

/// Concatenated edge ids, "e#k" for copy k of a multi-edge bundle.
std::string path_label(const Graph& g, const Path& path);

/// F(X): paths e_1...e_n with s(e_1) and every r(e_i), i < n, outside X and
/// r(e_n) in X. Ordered by length, then label.
struct EntryPaths {
  std::vector<Path> paths;
  /// F(X) is infinite; paths then holds every member of length <= depth.
  bool infinite = false;
  std::size_t depth = 0;
};

/// Upper bound on the number of materialised paths of F(X).
inline constexpr std::size_t default_path_budget = std::size_t{1} << 16;

/// Throws NotRowFinite when an infinite bundle lies on some path of F(X).
/// An infinite F(X) stops at the last full length within max_paths (depth
/// records it); a finite F(X) above max_paths throws std::length_error.
EntryPaths f_of_x(const Graph& g, const VertexSet& x, std::size_t depth_bound,
                  std::size_t max_paths = default_path_budget);

/// _X E. When F(X) is infinite the graph is truncated at depth and marked.
struct PorcupineGraph {
  Graph graph;
  bool infinite = false;
  std::size_t depth = 0;
  /// w^α -> label of α, x -> x.
  std::map<std::string, std::string> vertex_origin;
  /// f^α -> label of α, e -> e.
  std::map<std::string, std::string> edge_origin;
};

PorcupineGraph porcupine(const Graph& g, const VertexSet& x, std::size_t depth_bound,
                         std::size_t max_paths = default_path_budget);

/// 3·|E^0|, the default truncation depth.
std::size_t default_depth(const Graph& g);

struct AlgebraTerm {
  enum class Kind { Matrix, MatrixLaurent, NamedLPA };
  Kind kind = Kind::NamedLPA;
  std::size_t size = 1;
  RingSpec ring = RingSpec::integers();
  /// Graph handle printed for NamedLPA.
  std::string graph_name;
  bool infinite_graph = false;

  friend bool operator==(const AlgebraTerm&, const AlgebraTerm&) = default;
};

/// Formal direct sum; an empty sum is the zero algebra.
struct AlgebraDescriptor {
  std::vector<AlgebraTerm> terms;
  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

/// "L_Z" or "L_{Z_n}".
std::string lpa_symbol(const RingSpec& ring, const SymbolTable& symbols = {});
std::string to_string(const AlgebraTerm& t, const SymbolTable& symbols = {});
std::string to_string(const AlgebraDescriptor& d, const SymbolTable& symbols = {});

/// Closed forms for the components whose algebra is forced: acyclic with a
/// single sink (M_n(R), n = number of paths ending at the sink) and exitless
/// cycles (M_n(R[x,x^-1])). The two-vertex Toeplitz graph prints as
/// L_R(T); every other component is a named Leavitt path algebra.
/// Throws NotRowFinite on infinite bundles.
AlgebraDescriptor recognize(const Graph& g, const RingSpec& ring);

/// Exact isomorphism search respecting bundle multiplicities. Returns the
/// image of each vertex of a in b.
std::optional<std::vector<VertexId>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace lpa

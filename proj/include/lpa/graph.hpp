#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace lpa {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Subset of E^0, indexed by VertexId.
using VertexSet = boost::dynamic_bitset<>;

/// Raised when a computation needs a row-finite graph and gets an
/// infinite emitter.
class NotRowFinite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of parallel edges in a bundle: a positive integer or infinity.
class Multiplicity {
 public:
  constexpr explicit Multiplicity(std::uint64_t n = 1) : count_(n) {
    if (n == 0) throw std::invalid_argument("multiplicity must be >= 1");
  }
  static constexpr Multiplicity infinite() {
    Multiplicity m;
    m.count_ = 0;
    return m;
  }

  constexpr bool is_infinite() const { return count_ == 0; }
  std::uint64_t count() const {
    if (is_infinite()) throw std::logic_error("infinite multiplicity has no count");
    return count_;
  }
  std::string to_string() const;

  friend constexpr bool operator==(Multiplicity, Multiplicity) = default;

 private:
  std::uint64_t count_;  // 0 encodes infinity
};

struct EdgeBundle {
  std::string id;
  VertexId src = 0;
  VertexId dst = 0;
  Multiplicity mult{1};

  friend bool operator==(const EdgeBundle&, const EdgeBundle&) = default;
};

/// Edge bundle described by vertex names, used to build a Graph.
struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
  Multiplicity mult{1};
};

enum class VertexKind { Sink, Regular, InfiniteEmitter };

std::string_view to_string(VertexKind kind);

/// Finite directed multigraph. Parallel edges between the same ordered
/// pair of vertices are folded into one bundle with a multiplicity.
///
/// Vertices are stored sorted by name, so VertexId order is the
/// lexicographic order used for every deterministic output. Edges are
/// stored sorted by id. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
        std::string name = "E");

  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Throws std::invalid_argument for unknown names.
  VertexId vertex(std::string_view name) const;

  const std::vector<EdgeBundle>& edges() const { return edges_; }
  const EdgeBundle& edge(EdgeId e) const { return edges_.at(e); }
  std::optional<EdgeId> find_edge(std::string_view id) const;
  /// Bundle from src to dst, if any.
  std::optional<EdgeId> bundle_between(VertexId src, VertexId dst) const;

  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }

  bool row_finite() const;

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet full_set() const;
  VertexSet make_set(std::span<const std::string> names) const;
  VertexSet make_set(std::initializer_list<std::string_view> names) const;
  std::vector<std::string> names_of(const VertexSet& set) const;
  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::string name_ = "E";
  std::vector<std::string> vertices_;
  std::vector<EdgeBundle> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

VertexKind classify_vertex(const Graph& g, VertexId v);
VertexKind classify_vertex(const Graph& g, std::string_view v);

/// T(v): vertices reachable from v, v included.
VertexSet tree(const Graph& g, VertexId v);
/// M(v): vertices from which v is reachable, v included.
VertexSet upstream(const Graph& g, VertexId v);

/// Vertex sets ordered by size, then by the sorted list of members.
bool set_less(const VertexSet& a, const VertexSet& b);

std::vector<VertexId> members(const VertexSet& set);

}  // namespace lpa

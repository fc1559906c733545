#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

bool is_hereditary(const Graph& g, const VertexSet& set);
/// Saturation rule only: every regular vertex whose ranges lie in the set
/// belongs to it.
bool is_saturated(const Graph& g, const VertexSet& set);
bool is_hereditary_saturated(const Graph& g, const VertexSet& set);

/// Smallest hereditary superset of x (union of trees).
VertexSet hereditary_closure(const Graph& g, const VertexSet& x);
/// Smallest hereditary saturated superset of x.
VertexSet saturated_closure(const Graph& g, const VertexSet& x);

/// B_H for a hereditary saturated H: infinite emitters outside H sending
/// finitely many, and at least one, edges to E^0 \ H.
/// Throws std::invalid_argument if H is not hereditary saturated.
VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

/// The S-saturation of a hereditary set H: least hereditary saturated
/// H' ⊇ H that also absorbs every v ∈ S whose ranges lie in H'. An
/// infinite bundle contributes its single target to the ranges.
/// Requires S ⊆ H ∪ B_H.
VertexSet s_saturation(const Graph& g, const VertexSet& h, const VertexSet& s);

struct HereditarySaturatedOptions {
  /// Graphs up to this many vertices are enumerated over the powerset;
  /// larger ones by closure generation.
  std::size_t brute_force_limit = 20;
  bool parallel = true;
};

/// H_E sorted by size, then lexicographically.
std::vector<VertexSet> enumerate_hereditary_saturated(
    const Graph& g, HereditarySaturatedOptions options = {});

/// H_E generated from ∅ by repeatedly joining with the sets H_v.
/// Exact for every graph; sorted like enumerate_hereditary_saturated.
std::vector<VertexSet> generate_hereditary_saturated(const Graph& g);

/// H_v, the smallest hereditary saturated set containing v. Computed as
/// the saturated closure of {v} and cross-checked against the intersection
/// of all members of H_E containing v; a mismatch throws std::logic_error.
VertexSet hv(const Graph& g, VertexId v);
VertexSet hv(const Graph& g, VertexId v, const std::vector<VertexSet>& all_hs);

struct AdmissiblePair {
  VertexSet h;
  VertexSet s;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// (H1,S1) ≤′ (H2,S2) iff H1 ⊆ H2 and S1 ⊆ H2 ∪ S2.
bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b);
bool pair_less(const AdmissiblePair& a, const AdmissiblePair& b);
std::string to_string(const Graph& g, const AdmissiblePair& p);

/// Element of (Ê)^0: a vertex v, or v^H for a breaking vertex v of H.
struct ExtendedVertex {
  VertexId vertex = 0;
  std::optional<VertexSet> broken_by;

  bool is_broken() const { return broken_by.has_value(); }
  friend bool operator==(const ExtendedVertex&, const ExtendedVertex&) = default;
};

std::string to_string(const Graph& g, const ExtendedVertex& x);

struct PairLatticeOptions {
  HereditarySaturatedOptions enumeration;
  bool parallel = true;
};

/// T_E with ≤′, joins and meets materialised. Element 0 is (∅,∅) and the
/// last element is (E^0,∅); the element order is a linear extension of ≤′.
class PairLattice {
 public:
  explicit PairLattice(Graph g, PairLatticeOptions options = {});

  const Graph& graph() const { return graph_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<AdmissiblePair>& elements() const { return elements_; }
  const AdmissiblePair& operator[](std::size_t i) const { return elements_.at(i); }

  std::size_t minimum() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }
  /// Indices of T_E* = T_E \ {(∅,∅)}.
  std::vector<std::size_t> nonzero() const;

  std::optional<std::size_t> find(const AdmissiblePair& p) const;
  /// Throws std::invalid_argument when p is not an admissible pair.
  std::size_t index_of(const AdmissiblePair& p) const;

  bool leq(std::size_t a, std::size_t b) const { return order_[a * size() + b] != 0; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  /// Hasse diagram edges (lower, upper).
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  const std::vector<VertexSet>& hereditary_saturated_sets() const { return hs_sets_; }
  /// B_H for the i-th member of H_E.
  const VertexSet& breaking_of(std::size_t hs_index) const { return breaking_.at(hs_index); }
  std::optional<std::size_t> hs_index(const VertexSet& h) const;

  /// (Ê)^0: every vertex in id order, then every v^H by (H, v).
  const std::vector<ExtendedVertex>& extended_vertices() const { return extended_; }
  std::optional<std::size_t> extended_index(const ExtendedVertex& x) const;
  const VertexSet& hv(VertexId v) const { return hv_.at(v); }

 private:
  Graph graph_;
  std::vector<VertexSet> hs_sets_;
  std::vector<VertexSet> breaking_;
  std::vector<AdmissiblePair> elements_;
  std::map<std::pair<VertexSet, VertexSet>, std::size_t> index_;
  std::vector<std::uint8_t> order_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::vector<ExtendedVertex> extended_;
  std::vector<VertexSet> hv_;
};

/// Join by the S-saturation formula, checked against the least upper bound
/// in the materialised order. Disagreement throws std::logic_error.
AdmissiblePair pair_join(const PairLattice& lattice, const AdmissiblePair& a,
                         const AdmissiblePair& b);
/// Greatest lower bound in the materialised order.
AdmissiblePair pair_meet(const PairLattice& lattice, const AdmissiblePair& a,
                         const AdmissiblePair& b);

namespace detail {
/// S-saturation without precondition checks.
VertexSet s_saturate(const Graph& g, const VertexSet& h, const VertexSet& s);
/// B_H for any hereditary H.
VertexSet breaking_of_hereditary(const Graph& g, const VertexSet& h);
}  // namespace detail

}  // namespace lpa

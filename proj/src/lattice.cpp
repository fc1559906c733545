#include "lpa/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lpa/kernels.hpp"

namespace lpa {

namespace {

bool ranges_inside(const Graph& g, VertexId v, const VertexSet& set) {
  for (EdgeId e : g.out_edges(v))
    if (!set.test(g.edge(e).dst)) return false;
  return true;
}

void require_size(const Graph& g, const VertexSet& set) {
  if (set.size() != g.vertex_count())
    throw std::invalid_argument("vertex set does not belong to this graph");
}

void sort_sets(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end(), set_less); }

}  // namespace

bool is_hereditary(const Graph& g, const VertexSet& set) {
  require_size(g, set);
  for (VertexId v : members(set))
    if (!ranges_inside(g, v, set)) return false;
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& set) {
  require_size(g, set);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!set.test(v) && classify_vertex(g, v) == VertexKind::Regular && ranges_inside(g, v, set))
      return false;
  return true;
}

bool is_hereditary_saturated(const Graph& g, const VertexSet& set) {
  return is_hereditary(g, set) && is_saturated(g, set);
}

VertexSet hereditary_closure(const Graph& g, const VertexSet& x) {
  require_size(g, x);
  VertexSet out = g.empty_set();
  for (VertexId v : members(x))
    if (!out.test(v)) out |= tree(g, v);
  return out;
}

namespace detail {

VertexSet s_saturate(const Graph& g, const VertexSet& h, const VertexSet& s) {
  VertexSet out = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (out.test(v)) continue;
      const bool rule_applies =
          classify_vertex(g, v) == VertexKind::Regular || (s.test(v) && !g.out_edges(v).empty());
      if (rule_applies && ranges_inside(g, v, out)) {
        out.set(v);
        changed = true;
      }
    }
  }
  return out;
}

VertexSet breaking_of_hereditary(const Graph& g, const VertexSet& h) {
  VertexSet out = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.test(v) || classify_vertex(g, v) != VertexKind::InfiniteEmitter) continue;
    bool infinite = false;
    std::uint64_t leaving = 0;
    for (EdgeId e : g.out_edges(v)) {
      const auto& edge = g.edge(e);
      if (h.test(edge.dst)) continue;
      if (edge.mult.is_infinite()) {
        infinite = true;
        break;
      }
      leaving += edge.mult.count();
    }
    if (!infinite && leaving > 0) out.set(v);
  }
  return out;
}

}  // namespace detail

VertexSet saturated_closure(const Graph& g, const VertexSet& x) {
  return detail::s_saturate(g, hereditary_closure(g, x), g.empty_set());
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  require_size(g, h);
  if (!is_hereditary_saturated(g, h))
    throw std::invalid_argument("breaking vertices need a hereditary saturated set");
  return detail::breaking_of_hereditary(g, h);
}

VertexSet s_saturation(const Graph& g, const VertexSet& h, const VertexSet& s) {
  require_size(g, h);
  require_size(g, s);
  if (!is_hereditary(g, h)) throw std::invalid_argument("S-saturation needs a hereditary set");
  if (!s.is_subset_of(h | detail::breaking_of_hereditary(g, h)))
    throw std::invalid_argument("S is not contained in H ∪ B_H");
  return detail::s_saturate(g, h, s);
}

std::vector<VertexSet> generate_hereditary_saturated(const Graph& g) {
  std::vector<VertexSet> generators;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    generators.push_back(saturated_closure(g, tree(g, v)));

  std::set<VertexSet> seen{g.empty_set()};
  std::deque<VertexSet> queue{g.empty_set()};
  while (!queue.empty()) {
    VertexSet h = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : generators) {
      if (gen.is_subset_of(h)) continue;
      VertexSet next = detail::s_saturate(g, h | gen, g.empty_set());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  sort_sets(out);
  return out;
}

std::vector<VertexSet> enumerate_hereditary_saturated(const Graph& g,
                                                      HereditarySaturatedOptions options) {
  if (g.vertex_count() > options.brute_force_limit || g.vertex_count() > 30)
    return generate_hereditary_saturated(g);

  auto masks = kernels::to_masks(g);
  auto found = options.parallel ? kernels::hereditary_saturated_masks_parallel(masks)
                                : kernels::hereditary_saturated_masks_serial(masks);
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (std::uint64_t m : found) out.emplace_back(g.vertex_count(), m);
  sort_sets(out);
  return out;
}

VertexSet hv(const Graph& g, VertexId v, const std::vector<VertexSet>& all_hs) {
  if (v >= g.vertex_count()) throw std::invalid_argument("unknown vertex id");
  VertexSet closure = saturated_closure(g, tree(g, v));
  VertexSet meet = g.full_set();
  for (const auto& h : all_hs)
    if (h.test(v)) meet &= h;
  if (meet != closure) throw std::logic_error("H_v closure disagrees with intersection over H_E");
  return closure;
}

VertexSet hv(const Graph& g, VertexId v) {
  return hv(g, v, enumerate_hereditary_saturated(g));
}

bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
  return a.h.is_subset_of(b.h) && a.s.is_subset_of(b.h | b.s);
}

bool pair_less(const AdmissiblePair& a, const AdmissiblePair& b) {
  if (a.h != b.h) return set_less(a.h, b.h);
  return set_less(a.s, b.s);
}

namespace {

std::string braced(const Graph& g, const VertexSet& set) {
  if (set.none()) return "∅";
  std::string out = "{";
  bool first = true;
  for (const auto& name : g.names_of(set)) {
    if (!first) out += ",";
    out += name;
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string to_string(const Graph& g, const AdmissiblePair& p) {
  return "(" + braced(g, p.h) + "," + braced(g, p.s) + ")";
}

std::string to_string(const Graph& g, const ExtendedVertex& x) {
  std::string out = g.vertex_name(x.vertex);
  if (x.is_broken()) out += "^" + braced(g, *x.broken_by);
  return out;
}

PairLattice::PairLattice(Graph g, PairLatticeOptions options) : graph_(std::move(g)) {
  hs_sets_ = enumerate_hereditary_saturated(graph_, options.enumeration);
  for (const auto& h : hs_sets_) {
    breaking_.push_back(detail::breaking_of_hereditary(graph_, h));
    auto b = members(breaking_.back());
    if (b.size() > 20) throw std::invalid_argument("too many breaking vertices to enumerate T_E");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.size()); ++mask) {
      VertexSet s = graph_.empty_set();
      for (std::size_t i = 0; i < b.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) s.set(b[i]);
      elements_.push_back(AdmissiblePair{h, std::move(s)});
    }
  }
  std::sort(elements_.begin(), elements_.end(), pair_less);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(std::make_pair(elements_[i].h, elements_[i].s), i);

  const std::size_t n = elements_.size();
  if (options.parallel) {
    order_ = kernels::order_matrix_parallel(elements_);
    join_ = kernels::lub_table_parallel(order_, n);
    meet_ = kernels::glb_table_parallel(order_, n);
  } else {
    order_ = kernels::order_matrix_serial(elements_);
    join_ = kernels::lub_table_serial(order_, n);
    meet_ = kernels::glb_table_serial(order_, n);
  }

  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    extended_.push_back(ExtendedVertex{v, std::nullopt});
    hv_.push_back(lpa::hv(graph_, v, hs_sets_));
  }
  for (std::size_t i = 0; i < hs_sets_.size(); ++i)
    for (VertexId v : members(breaking_[i])) extended_.push_back(ExtendedVertex{v, hs_sets_[i]});
}

std::vector<std::size_t> PairLattice::nonzero() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < size(); ++i) out.push_back(i);
  return out;
}

std::optional<std::size_t> PairLattice::find(const AdmissiblePair& p) const {
  auto it = index_.find(std::make_pair(p.h, p.s));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PairLattice::index_of(const AdmissiblePair& p) const {
  if (auto i = find(p)) return *i;
  throw std::invalid_argument("not an admissible pair: " + to_string(graph_, p));
}

std::vector<std::pair<std::size_t, std::size_t>> PairLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!leq(a, b)) continue;
      bool direct = true;
      for (std::size_t c = a + 1; c < b && direct; ++c)
        if (leq(a, c) && leq(c, b)) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

std::optional<std::size_t> PairLattice::hs_index(const VertexSet& h) const {
  auto it = std::lower_bound(hs_sets_.begin(), hs_sets_.end(), h, set_less);
  if (it == hs_sets_.end() || *it != h) return std::nullopt;
  return static_cast<std::size_t>(it - hs_sets_.begin());
}

std::optional<std::size_t> PairLattice::extended_index(const ExtendedVertex& x) const {
  auto it = std::find(extended_.begin(), extended_.end(), x);
  if (it == extended_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - extended_.begin());
}

AdmissiblePair pair_join(const PairLattice& lattice, const AdmissiblePair& a,
                         const AdmissiblePair& b) {
  const auto ia = lattice.index_of(a);
  const auto ib = lattice.index_of(b);
  const auto& g = lattice.graph();
  VertexSet sources = a.s | b.s;
  VertexSet h = detail::s_saturate(g, a.h | b.h, sources);
  AdmissiblePair formula{h, sources - h};
  const auto& lub = lattice[lattice.join(ia, ib)];
  if (!(formula == lub))
    throw std::logic_error("join formula " + to_string(g, formula) +
                           " disagrees with least upper bound " + to_string(g, lub));
  return formula;
}

AdmissiblePair pair_meet(const PairLattice& lattice, const AdmissiblePair& a,
                         const AdmissiblePair& b) {
  return lattice[lattice.meet(lattice.index_of(a), lattice.index_of(b))];
}

}  // namespace lpa

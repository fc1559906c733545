#include "lpa/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace lpa {

std::string Multiplicity::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(count_);
}

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Sink:
      return "sink";
    case VertexKind::Regular:
      return "regular";
    case VertexKind::InfiniteEmitter:
      return "infinite-emitter";
  }
  return "?";
}

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
             std::string name)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("duplicate vertex id");
  for (const auto& v : vertices_)
    if (v.empty()) throw std::invalid_argument("empty vertex id");

  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  std::set<std::pair<VertexId, VertexId>> endpoints;
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& spec = edges[i];
    if (spec.id.empty()) throw std::invalid_argument("empty edge id");
    if (i > 0 && edges[i - 1].id == spec.id)
      throw std::invalid_argument("duplicate edge id '" + spec.id + "'");
    auto src = find_vertex(spec.src);
    auto dst = find_vertex(spec.dst);
    if (!src || !dst)
      throw std::invalid_argument("edge '" + spec.id +
                                  "' references an undeclared vertex");
    if (!endpoints.emplace(*src, *dst).second)
      throw std::invalid_argument("second bundle between '" + spec.src + "' and '" +
                                  spec.dst + "' (use a multiplicity)");
    edges_.push_back(EdgeBundle{spec.id, *src, *dst, spec.mult});
  }

  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    out_[edges_[e].src].push_back(e);
    in_[edges_[e].dst].push_back(e);
  }
}

Graph Graph::renamed(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

std::optional<EdgeId> Graph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const EdgeBundle& e, std::string_view key) {
                               return e.id < key;
                             });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::optional<EdgeId> Graph::bundle_between(VertexId src, VertexId dst) const {
  for (EdgeId e : out_.at(src))
    if (edges_[e].dst == dst) return e;
  return std::nullopt;
}

bool Graph::row_finite() const {
  return std::none_of(edges_.begin(), edges_.end(),
                      [](const EdgeBundle& e) { return e.mult.is_infinite(); });
}

VertexSet Graph::full_set() const {
  VertexSet s(vertex_count());
  s.set();
  return s;
}

VertexSet Graph::make_set(std::span<const std::string> names) const {
  VertexSet s = empty_set();
  for (const auto& n : names) s.set(vertex(n));
  return s;
}

VertexSet Graph::make_set(std::initializer_list<std::string_view> names) const {
  VertexSet s = empty_set();
  for (auto n : names) s.set(vertex(n));
  return s;
}

std::vector<std::string> Graph::names_of(const VertexSet& set) const {
  std::vector<std::string> out;
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
    out.push_back(vertices_.at(v));
  return out;
}

std::vector<EdgeSpec> Graph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_)
    out.push_back(EdgeSpec{e.id, vertices_[e.src], vertices_[e.dst], e.mult});
  return out;
}

// Structural equality; the display name is not compared.
bool operator==(const Graph& a, const Graph& b) {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

VertexKind classify_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("unknown vertex id");
  auto out = g.out_edges(v);
  if (out.empty()) return VertexKind::Sink;
  for (EdgeId e : out)
    if (g.edge(e).mult.is_infinite()) return VertexKind::InfiniteEmitter;
  return VertexKind::Regular;
}

VertexKind classify_vertex(const Graph& g, std::string_view v) {
  return classify_vertex(g, g.vertex(v));
}

namespace {

template <typename Next>
VertexSet reach(const Graph& g, VertexId start, Next&& next) {
  if (start >= g.vertex_count()) throw std::invalid_argument("unknown vertex id");
  VertexSet seen = g.empty_set();
  std::deque<VertexId> queue{start};
  seen.set(start);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    next(v, [&](VertexId w) {
      if (!seen.test(w)) {
        seen.set(w);
        queue.push_back(w);
      }
    });
  }
  return seen;
}

}  // namespace

VertexSet tree(const Graph& g, VertexId v) {
  return reach(g, v, [&](VertexId x, auto&& visit) {
    for (EdgeId e : g.out_edges(x)) visit(g.edge(e).dst);
  });
}

VertexSet upstream(const Graph& g, VertexId v) {
  return reach(g, v, [&](VertexId x, auto&& visit) {
    for (EdgeId e : g.in_edges(x)) visit(g.edge(e).src);
  });
}

std::vector<VertexId> members(const VertexSet& set) {
  std::vector<VertexId> out;
  out.reserve(set.count());
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
    out.push_back(v);
  return out;
}

bool set_less(const VertexSet& a, const VertexSet& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto ma = members(a), mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace lpa

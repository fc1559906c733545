#include "lpa/constructions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lpa {

QuotientGraph quotient_graph(const Graph& g, const AdmissiblePair& p) {
  if (p.h.size() != g.vertex_count() || p.s.size() != g.vertex_count())
    throw std::invalid_argument("pair does not belong to this graph");
  if (!is_hereditary_saturated(g, p.h))
    throw std::invalid_argument("H is not hereditary saturated");
  const VertexSet breaking = breaking_vertices(g, p.h);
  if (!p.s.is_subset_of(breaking)) throw std::invalid_argument("S is not contained in B_H");
  const VertexSet primed = breaking - p.s;

  QuotientGraph q;
  std::vector<std::string> vertices;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (p.h.test(v)) continue;
    vertices.push_back(g.vertex_name(v));
    q.vertex_origin[g.vertex_name(v)] = g.vertex_name(v);
  }
  for (VertexId v : members(primed)) {
    vertices.push_back(g.vertex_name(v) + "'");
    q.vertex_origin[g.vertex_name(v) + "'"] = g.vertex_name(v);
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    if (p.h.test(e.dst)) continue;
    edges.push_back(EdgeSpec{e.id, g.vertex_name(e.src), g.vertex_name(e.dst), e.mult});
    q.edge_origin[e.id] = e.id;
    if (primed.test(e.dst)) {
      edges.push_back(
          EdgeSpec{e.id + "'", g.vertex_name(e.src), g.vertex_name(e.dst) + "'", e.mult});
      q.edge_origin[e.id + "'"] = e.id;
    }
  }
  const bool unchanged = p.h.none() && p.s.none();
  q.graph = Graph(std::move(vertices), std::move(edges),
                  unchanged ? g.name() : g.name() + "\\" + to_string(g, p));
  return q;
}

std::string path_label(const Graph& g, const Path& path) {
  std::string out;
  for (const auto& step : path) {
    out += g.edge(step.edge).id;
    if (step.copy != 0) out += "#" + std::to_string(step.copy);
  }
  return out;
}

namespace {

// Vertices outside X that start some path of F(X).
VertexSet entry_support(const Graph& g, const VertexSet& x) {
  VertexSet support = g.empty_set();
  std::deque<VertexId> queue;
  for (VertexId v : members(x))
    for (EdgeId e : g.in_edges(v))
      if (VertexId s = g.edge(e).src; !x.test(s) && !support.test(s)) {
        support.set(s);
        queue.push_back(s);
      }
  while (!queue.empty()) {
    VertexId w = queue.front();
    queue.pop_front();
    for (EdgeId e : g.in_edges(w))
      if (VertexId s = g.edge(e).src; !x.test(s) && !support.test(s)) {
        support.set(s);
        queue.push_back(s);
      }
  }
  return support;
}

bool has_cycle_within(const Graph& g, const VertexSet& set) {
  enum Color : std::uint8_t { White, Grey, Black };
  std::vector<Color> color(g.vertex_count(), White);
  auto visit = [&](auto&& self, VertexId v) -> bool {
    color[v] = Grey;
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.edge(e).dst;
      if (!set.test(w)) continue;
      if (color[w] == Grey) return true;
      if (color[w] == White && self(self, w)) return true;
    }
    color[v] = Black;
    return false;
  };
  for (VertexId v : members(set))
    if (color[v] == White && visit(visit, v)) return true;
  return false;
}

void append_copies(const Graph& g, EdgeId e, const Path& tail, std::vector<Path>& out) {
  const auto count = g.edge(e).mult.count();
  for (std::uint64_t k = 1; k <= count; ++k) {
    Path p;
    p.reserve(tail.size() + 1);
    p.push_back(PathStep{e, count == 1 ? 0 : k});
    p.insert(p.end(), tail.begin(), tail.end());
    out.push_back(std::move(p));
  }
}

std::string braced_names(const Graph& g, const VertexSet& set) {
  std::string out;
  for (const auto& n : g.names_of(set)) out += (out.empty() ? "" : ",") + n;
  return "{" + out + "}";
}

}  // namespace

EntryPaths f_of_x(const Graph& g, const VertexSet& x, std::size_t depth_bound,
                  std::size_t max_paths) {
  if (x.size() != g.vertex_count()) throw std::invalid_argument("X does not belong to this graph");
  const VertexSet support = entry_support(g, x);
  for (const auto& e : g.edges())
    if (e.mult.is_infinite() && support.test(e.src) && (support.test(e.dst) || x.test(e.dst)))
      throw NotRowFinite("infinite bundle '" + e.id + "' lies on a path entering X");

  EntryPaths out;
  out.infinite = has_cycle_within(g, support);
  out.depth = out.infinite ? depth_bound : 0;

  // Entry edges of w as (edge, multiplicity) with sources outside X.
  auto entering = [&](VertexId w) {
    std::vector<EdgeId> out_edges;
    for (EdgeId e : g.in_edges(w))
      if (!x.test(g.edge(e).src)) out_edges.push_back(e);
    return out_edges;
  };
  auto budget_error = [&] {
    return std::length_error("F(X) has more than " + std::to_string(max_paths) + " paths");
  };
  auto fits = [&](std::size_t count) { return out.paths.size() + count <= max_paths; };

  if (out.infinite && depth_bound == 0) return out;
  std::vector<Path> level;
  std::size_t pending = 0;
  for (VertexId v : members(x))
    for (EdgeId e : entering(v)) pending += std::min<std::uint64_t>(g.edge(e).mult.count(), max_paths + 1);
  if (!fits(pending)) {
    if (!out.infinite) throw budget_error();
    out.depth = 0;
    return out;
  }
  for (VertexId v : members(x))
    for (EdgeId e : entering(v)) append_copies(g, e, {}, level);

  std::size_t length = 1;
  while (!level.empty()) {
    std::vector<std::pair<std::string, Path>> labelled;
    for (const auto& p : level) labelled.emplace_back(path_label(g, p), p);
    std::sort(labelled.begin(), labelled.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [label, p] : labelled) out.paths.push_back(std::move(p));
    if (out.infinite && length == depth_bound) break;

    pending = 0;
    for (const auto& beta : level)
      for (EdgeId e : entering(g.edge(beta.front().edge).src))
        pending += std::min<std::uint64_t>(g.edge(e).mult.count(), max_paths + 1);
    if (!fits(pending)) {
      if (!out.infinite) throw budget_error();
      out.depth = length;
      break;
    }
    std::vector<Path> next;
    for (const auto& beta : level)
      for (EdgeId e : entering(g.edge(beta.front().edge).src)) append_copies(g, e, beta, next);
    level = std::move(next);
    ++length;
  }
  if (!out.infinite)
    out.depth = out.paths.empty() ? 0 : out.paths.back().size();
  return out;
}

std::size_t default_depth(const Graph& g) { return 3 * g.vertex_count(); }

PorcupineGraph porcupine(const Graph& g, const VertexSet& x, std::size_t depth_bound,
                         std::size_t max_paths) {
  const auto entries = f_of_x(g, x, depth_bound, max_paths);
  PorcupineGraph out;
  out.infinite = entries.infinite;
  out.depth = entries.depth;

  std::vector<std::string> vertices = g.names_of(x);
  for (const auto& v : vertices) out.vertex_origin[v] = v;
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    if (!x.test(e.src) || !x.test(e.dst)) continue;
    edges.push_back(EdgeSpec{e.id, g.vertex_name(e.src), g.vertex_name(e.dst), e.mult});
    out.edge_origin[e.id] = e.id;
  }
  for (const auto& alpha : entries.paths) {
    const auto label = path_label(g, alpha);
    const std::string w = "w^{" + label + "}";
    const std::string f = "f^{" + label + "}";
    std::string target;
    if (alpha.size() == 1) {
      target = g.vertex_name(g.edge(alpha.front().edge).dst);
    } else {
      target = "w^{" + path_label(g, Path(alpha.begin() + 1, alpha.end())) + "}";
    }
    vertices.push_back(w);
    edges.push_back(EdgeSpec{f, w, target, Multiplicity(1)});
    out.vertex_origin[w] = label;
    out.edge_origin[f] = label;
  }
  const bool whole = x.count() == g.vertex_count();
  out.graph = Graph(std::move(vertices), std::move(edges),
                    whole ? g.name() : "_" + braced_names(g, x) + g.name());
  return out;
}

std::string lpa_symbol(const RingSpec& ring, const SymbolTable& symbols) {
  const auto r = to_string(ring, symbols);
  return r.size() == 1 ? "L_" + r : "L_{" + r + "}";
}

std::string to_string(const AlgebraTerm& t, const SymbolTable& symbols) {
  const auto ring = to_string(t.ring, symbols);
  switch (t.kind) {
    case AlgebraTerm::Kind::Matrix:
      return t.size == 1 ? ring : "M_" + std::to_string(t.size) + "(" + ring + ")";
    case AlgebraTerm::Kind::MatrixLaurent: {
      const auto laurent = ring + "[x,x^-1]";
      return t.size == 1 ? laurent : "M_" + std::to_string(t.size) + "(" + laurent + ")";
    }
    case AlgebraTerm::Kind::NamedLPA:
      return lpa_symbol(t.ring, symbols) + "(" + t.graph_name + ")" +
             (t.infinite_graph ? " [infinite graph, truncated]" : "");
  }
  return "?";
}

std::string to_string(const AlgebraDescriptor& d, const SymbolTable& symbols) {
  if (d.terms.empty()) return "0";
  std::string out;
  for (const auto& t : d.terms) out += (out.empty() ? "" : " (+) ") + to_string(t, symbols);
  return out;
}

namespace {

std::vector<VertexSet> weak_components(const Graph& g) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto root = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) parent[root(e.src)] = root(e.dst);
  std::map<VertexId, VertexSet> by_root;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = by_root.try_emplace(root(v), g.empty_set());
    it->second.set(v);
  }
  std::vector<VertexSet> out;
  for (auto& [r, set] : by_root) out.push_back(std::move(set));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.find_first() < b.find_first(); });
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("path count overflows 64 bits");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("path count overflows 64 bits");
  return a * b;
}

// Number of paths (trivial one included) ending at sink, summed over the
// acyclic component.
std::uint64_t paths_into(const Graph& g, const VertexSet& component, VertexId sink) {
  std::vector<std::optional<std::uint64_t>> memo(g.vertex_count());
  auto count = [&](auto&& self, VertexId v) -> std::uint64_t {
    if (memo[v]) return *memo[v];
    std::uint64_t total = v == sink ? 1 : 0;
    for (EdgeId e : g.out_edges(v))
      total = checked_add(total, checked_mul(g.edge(e).mult.count(), self(self, g.edge(e).dst)));
    memo[v] = total;
    return total;
  };
  std::uint64_t sum = 0;
  for (VertexId v : members(component)) sum = checked_add(sum, count(count, v));
  return sum;
}

bool exitless_cycle(const Graph& g, const VertexSet& component) {
  for (VertexId v : members(component)) {
    auto out = g.out_edges(v);
    auto in = g.in_edges(v);
    if (out.size() != 1 || in.size() != 1) return false;
    if (g.edge(out.front()).mult != Multiplicity(1)) return false;
  }
  return true;  // weakly connected with in = out = 1 everywhere: one cycle
}

bool toeplitz_shape(const Graph& g, const VertexSet& component) {
  if (component.count() != 2) return false;
  auto vs = members(component);
  for (int flip = 0; flip < 2; ++flip) {
    VertexId u = vs[flip], v = vs[1 - flip];
    auto loop = g.bundle_between(u, u);
    auto exit = g.bundle_between(u, v);
    if (loop && exit && g.out_edges(u).size() == 2 && g.out_edges(v).empty() &&
        g.edge(*loop).mult == Multiplicity(1) && g.edge(*exit).mult == Multiplicity(1))
      return true;
  }
  return false;
}

}  // namespace

AlgebraDescriptor recognize(const Graph& g, const RingSpec& ring) {
  if (!g.row_finite()) throw NotRowFinite("recognition needs a graph without infinite bundles");
  AlgebraDescriptor out;
  if (ring.is_zero()) return out;
  const auto components = weak_components(g);
  for (const auto& comp : components) {
    AlgebraTerm term;
    term.ring = ring;
    if (!has_cycle_within(g, comp)) {
      std::vector<VertexId> sinks;
      for (VertexId v : members(comp))
        if (g.out_edges(v).empty()) sinks.push_back(v);
      if (sinks.size() == 1) {
        term.kind = AlgebraTerm::Kind::Matrix;
        term.size = paths_into(g, comp, sinks.front());
        out.terms.push_back(term);
        continue;
      }
    } else if (exitless_cycle(g, comp)) {
      term.kind = AlgebraTerm::Kind::MatrixLaurent;
      term.size = comp.count();
      out.terms.push_back(term);
      continue;
    }
    term.kind = AlgebraTerm::Kind::NamedLPA;
    if (toeplitz_shape(g, comp)) {
      term.graph_name = "T";
    } else if (components.size() == 1) {
      term.graph_name = g.name();
    } else {
      term.graph_name = g.name() + "|" + braced_names(g, comp);
    }
    out.terms.push_back(term);
  }
  return out;
}

namespace {

using Signature = std::vector<std::uint64_t>;

// Colour refinement run on both graphs with a shared palette, so equal
// colours are comparable across graphs.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Graph& a,
                                                                     const Graph& b) {
  auto mult_code = [](Multiplicity m) { return m.is_infinite() ? 0 : m.count(); };
  std::vector<std::size_t> ca(a.vertex_count(), 0), cb(b.vertex_count(), 0);
  std::size_t palette = 1;
  for (std::size_t round = 0; round <= a.vertex_count(); ++round) {
    std::map<Signature, std::size_t> colours;
    auto signature = [&](const Graph& g, const std::vector<std::size_t>& c, VertexId v) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> out, in;
      std::uint64_t loop = std::numeric_limits<std::uint64_t>::max();
      for (EdgeId e : g.out_edges(v)) {
        out.emplace_back(c[g.edge(e).dst], mult_code(g.edge(e).mult));
        if (g.edge(e).dst == v) loop = mult_code(g.edge(e).mult);
      }
      for (EdgeId e : g.in_edges(v)) in.emplace_back(c[g.edge(e).src], mult_code(g.edge(e).mult));
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      Signature s{c[v], loop, out.size(), in.size()};
      for (auto [x, y] : out) s.insert(s.end(), {x, y});
      for (auto [x, y] : in) s.insert(s.end(), {x, y});
      return s;
    };
    std::vector<Signature> sa, sb;
    for (VertexId v = 0; v < a.vertex_count(); ++v) sa.push_back(signature(a, ca, v));
    for (VertexId v = 0; v < b.vertex_count(); ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) colours.try_emplace(s, colours.size());
    for (const auto& s : sb) colours.try_emplace(s, colours.size());
    std::vector<std::size_t> na, nb;
    for (const auto& s : sa) na.push_back(colours.at(s));
    for (const auto& s : sb) nb.push_back(colours.at(s));
    const bool stable = colours.size() == palette;
    ca = std::move(na);
    cb = std::move(nb);
    palette = colours.size();
    if (stable && round > 0) break;
  }
  return {ca, cb};
}

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  const auto [ca, cb] = refine(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const std::size_t n = a.vertex_count();
  std::vector<VertexId> image(n), order(n);
  std::vector<bool> used(n, false);
  std::iota(order.begin(), order.end(), VertexId{0});
  // Rarest colours first shrinks the search tree.
  std::map<std::size_t, std::size_t> frequency;
  for (auto c : ca) ++frequency[c];
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId x, VertexId y) { return frequency[ca[x]] < frequency[ca[y]]; });

  auto same_bundle = [&](VertexId x, VertexId y, VertexId fx, VertexId fy) {
    auto ea = a.bundle_between(x, y);
    auto eb = b.bundle_between(fx, fy);
    if (ea.has_value() != eb.has_value()) return false;
    return !ea || a.edge(*ea).mult == b.edge(*eb).mult;
  };
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const VertexId x = order[depth];
    for (VertexId y = 0; y < n; ++y) {
      if (used[y] || cb[y] != ca[x]) continue;
      bool ok = same_bundle(x, x, y, y);
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const VertexId p = order[k];
        ok = same_bundle(x, p, y, image[p]) && same_bundle(p, x, image[p], y);
      }
      if (!ok) continue;
      used[y] = true;
      image[x] = y;
      if (self(self, depth + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

}  // namespace lpa

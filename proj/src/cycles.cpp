#include "lpa/cycles.hpp"

#include <algorithm>
#include <limits>

#include "lpa/lattice.hpp"

namespace lpa {

namespace {

Multiplicity times(Multiplicity a, Multiplicity b) {
  if (a.is_infinite() || b.is_infinite()) return Multiplicity::infinite();
  std::uint64_t x = a.count(), y = b.count();
  if (x > std::numeric_limits<std::uint64_t>::max() / y)
    throw std::overflow_error("cycle multiplicity overflows 64 bits");
  return Multiplicity(x * y);
}

void cycles_from(const Graph& g, VertexId start, std::vector<VertexId>& path,
                 std::vector<bool>& on_path, std::vector<Cycle>& out) {
  VertexId v = path.back();
  // Children in vertex order keeps the output lexicographic.
  std::vector<EdgeId> next(g.out_edges(v).begin(), g.out_edges(v).end());
  std::sort(next.begin(), next.end(), [&](EdgeId a, EdgeId b) {
    return g.edge(a).dst < g.edge(b).dst;
  });
  for (EdgeId e : next) {
    VertexId w = g.edge(e).dst;
    if (w == start) {
      out.push_back(make_cycle(g, path));
    } else if (w > start && !on_path[w]) {
      on_path[w] = true;
      path.push_back(w);
      cycles_from(g, start, path, on_path, out);
      path.pop_back();
      on_path[w] = false;
    }
  }
}

}  // namespace

Cycle make_cycle(const Graph& g, std::vector<VertexId> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty cycle");
  for (VertexId v : vertices)
    if (v >= g.vertex_count()) throw std::invalid_argument("cycle names unknown vertex");
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle visits a vertex twice");
  std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()),
              vertices.end());
  Cycle c;
  c.vertices = std::move(vertices);
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    VertexId from = c.vertices[i];
    VertexId to = c.vertices[(i + 1) % c.vertices.size()];
    auto e = g.bundle_between(from, to);
    if (!e)
      throw std::invalid_argument("no edge " + g.vertex_name(from) + " -> " +
                                  g.vertex_name(to) + " for cycle");
    c.edges.push_back(*e);
    c.copies = times(c.copies, g.edge(*e).mult);
  }
  return c;
}

void require_cycle(const Graph& g, const Cycle& c) {
  Cycle canonical = make_cycle(g, c.vertices);
  if (!(canonical == c)) throw std::invalid_argument("not a cycle of the graph");
}

std::vector<Cycle> enumerate_cycles(const Graph& g) {
  std::vector<Cycle> out;
  std::vector<bool> on_path(g.vertex_count(), false);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::vector<VertexId> path{s};
    on_path[s] = true;
    cycles_from(g, s, path, on_path, out);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

PathCount count_simple_closed_paths(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("unknown vertex id");
  const std::size_t n = g.vertex_count();

  // Interior vertices: reachable from v and reaching v without passing v.
  std::vector<bool> fwd(n, false), bwd(n, false);
  std::vector<VertexId> stack;
  for (EdgeId e : g.out_edges(v))
    if (VertexId w = g.edge(e).dst; w != v && !fwd[w]) fwd[w] = true, stack.push_back(w);
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(x))
      if (VertexId w = g.edge(e).dst; w != v && !fwd[w]) fwd[w] = true, stack.push_back(w);
  }
  for (EdgeId e : g.in_edges(v))
    if (VertexId w = g.edge(e).src; w != v && !bwd[w]) bwd[w] = true, stack.push_back(w);
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.in_edges(x))
      if (VertexId w = g.edge(e).src; w != v && !bwd[w]) bwd[w] = true, stack.push_back(w);
  }
  auto interior = [&](VertexId w) { return w != v && fwd[w] && bwd[w]; };

  // Memoised path counts towards v, saturating at 2. A cycle among interior
  // vertices yields infinitely many paths.
  enum : int { kUnseen = -1, kOnStack = -2 };
  std::vector<int> memo(n, kUnseen);
  bool many = false;
  auto add = [](int acc, Multiplicity m, int paths) {
    if (paths == 0) return acc;
    if (m.is_infinite()) return 2;
    std::uint64_t total = static_cast<std::uint64_t>(acc) + m.count() * paths;
    return total >= 2 ? 2 : static_cast<int>(total);
  };
  auto count_from = [&](auto&& self, VertexId x) -> int {
    if (memo[x] == kOnStack) {
      many = true;
      return 2;
    }
    if (memo[x] != kUnseen) return memo[x];
    memo[x] = kOnStack;
    int acc = 0;
    for (EdgeId e : g.out_edges(x)) {
      VertexId w = g.edge(e).dst;
      int paths = w == v ? 1 : interior(w) ? self(self, w) : 0;
      acc = add(acc, g.edge(e).mult, paths);
    }
    memo[x] = acc;
    return acc;
  };

  int total = 0;
  for (EdgeId e : g.out_edges(v)) {
    VertexId w = g.edge(e).dst;
    int paths = w == v ? 1 : interior(w) ? count_from(count_from, w) : 0;
    total = add(total, g.edge(e).mult, paths);
  }
  if (many || total >= 2) return PathCount::Many;
  return total == 1 ? PathCount::One : PathCount::Zero;
}

std::vector<EdgeId> exits(const Graph& g, const Cycle& c) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    for (EdgeId e : g.out_edges(c.vertices[i])) {
      if (e != c.edges[i] || g.edge(e).mult != Multiplicity(1)) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool condition_L(const Graph& g) {
  for (const auto& c : enumerate_cycles(g))
    if (exits(g, c).empty()) return false;
  return true;
}

bool condition_K(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (count_simple_closed_paths(g, v) == PathCount::One) return false;
  return true;
}

std::vector<Cycle> cu_cycles(const Graph& g) {
  std::vector<Cycle> out;
  for (auto& c : enumerate_cycles(g))
    if (count_simple_closed_paths(g, c.base()) == PathCount::One) out.push_back(std::move(c));
  return out;
}

VertexSet cycle_downset(const Graph& g, const Cycle& c) {
  require_cycle(g, c);
  VertexSet ranges = g.empty_set();
  for (EdgeId e : exits(g, c)) ranges.set(g.edge(e).dst);
  return saturated_closure(g, hereditary_closure(g, ranges));
}

}  // namespace lpa

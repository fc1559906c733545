#include "lpa/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "lpa/lattice.hpp"

namespace lpa::kernels {

MaskGraph to_masks(const Graph& g) {
  if (g.vertex_count() > 63)
    throw std::invalid_argument("bitmask kernels support at most 63 vertices");
  MaskGraph m;
  m.n = g.vertex_count();
  m.children.assign(m.n, 0);
  for (VertexId v = 0; v < m.n; ++v) {
    for (EdgeId e : g.out_edges(v)) m.children[v] |= std::uint64_t{1} << g.edge(e).dst;
    if (classify_vertex(g, v) == VertexKind::Regular) m.regular |= std::uint64_t{1} << v;
  }
  return m;
}

namespace {

bool hereditary_saturated(const MaskGraph& g, std::uint64_t set) {
  for (std::size_t v = 0; v < g.n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    const bool inside_children = (g.children[v] & ~set) == 0;
    if (set & bit) {
      if (!inside_children) return false;
    } else if ((g.regular & bit) && inside_children) {
      return false;
    }
  }
  return true;
}

std::uint64_t subset_count(const MaskGraph& g) {
  if (g.n > 30) throw std::invalid_argument("powerset enumeration limited to 30 vertices");
  return std::uint64_t{1} << g.n;
}

}  // namespace

std::vector<std::uint64_t> hereditary_saturated_masks_serial(const MaskGraph& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t total = subset_count(g);
  for (std::uint64_t set = 0; set < total; ++set)
    if (hereditary_saturated(g, set)) out.push_back(set);
  return out;
}

std::vector<std::uint64_t> hereditary_saturated_masks_parallel(const MaskGraph& g) {
  std::vector<std::uint64_t> out;
  const auto total = static_cast<std::int64_t>(subset_count(g));
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t set = 0; set < total; ++set)
      if (hereditary_saturated(g, static_cast<std::uint64_t>(set)))
        local.push_back(static_cast<std::uint64_t>(set));
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint8_t> order_matrix_serial(std::span<const AdmissiblePair> pairs) {
  const std::size_t n = pairs.size();
  std::vector<std::uint8_t> order(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) order[a * n + b] = pair_leq(pairs[a], pairs[b]);
  return order;
}

std::vector<std::uint8_t> order_matrix_parallel(std::span<const AdmissiblePair> pairs) {
  const auto n = static_cast<std::int64_t>(pairs.size());
  std::vector<std::uint8_t> order(pairs.size() * pairs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) order[a * n + b] = pair_leq(pairs[a], pairs[b]);
  return order;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// First common upper bound in index order, verified to lie below every other.
std::size_t lub(std::span<const std::uint8_t> order, std::size_t n, std::size_t a,
                std::size_t b) {
  auto leq = [&](std::size_t x, std::size_t y) { return order[x * n + y] != 0; };
  std::size_t found = kNone;
  for (std::size_t k = std::max(a, b); k < n; ++k) {
    if (!leq(a, k) || !leq(b, k)) continue;
    if (found == kNone) {
      found = k;
    } else if (!leq(found, k)) {
      return kNone;
    }
  }
  return found;
}

std::size_t glb(std::span<const std::uint8_t> order, std::size_t n, std::size_t a,
                std::size_t b) {
  auto leq = [&](std::size_t x, std::size_t y) { return order[x * n + y] != 0; };
  std::size_t found = kNone;
  for (std::size_t k = std::min(a, b) + 1; k-- > 0;) {
    if (!leq(k, a) || !leq(k, b)) continue;
    if (found == kNone) {
      found = k;
    } else if (!leq(k, found)) {
      return kNone;
    }
  }
  return found;
}

template <typename Bound>
std::vector<std::size_t> table_serial(std::span<const std::uint8_t> order, std::size_t n,
                                      Bound bound) {
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = bound(order, n, a, b);
      if (table[a * n + b] == kNone) throw std::logic_error("order is not a lattice");
    }
  return table;
}

template <typename Bound>
std::vector<std::size_t> table_parallel(std::span<const std::uint8_t> order, std::size_t n,
                                        Bound bound) {
  std::vector<std::size_t> table(n * n);
  std::atomic<bool> failed{false};
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto k = bound(order, n, static_cast<std::size_t>(a), b);
      if (k == kNone) failed = true;
      table[static_cast<std::size_t>(a) * n + b] = k;
    }
  if (failed) throw std::logic_error("order is not a lattice");
  return table;
}

}  // namespace

std::vector<std::size_t> lub_table_serial(std::span<const std::uint8_t> order, std::size_t n) {
  return table_serial(order, n, lub);
}
std::vector<std::size_t> lub_table_parallel(std::span<const std::uint8_t> order, std::size_t n) {
  return table_parallel(order, n, lub);
}
std::vector<std::size_t> glb_table_serial(std::span<const std::uint8_t> order, std::size_t n) {
  return table_serial(order, n, glb);
}
std::vector<std::size_t> glb_table_parallel(std::span<const std::uint8_t> order, std::size_t n) {
  return table_parallel(order, n, glb);
}

}  // namespace lpa::kernels

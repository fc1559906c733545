#pragma once

// Data-parallel inner loops of the lattice computations. Each kernel has a
// serial reference used by the tests and the benchmark; the OpenMP variant
// must return identical results.

#include <cstdint>
#include <span>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {
struct AdmissiblePair;
}

namespace lpa::kernels {

/// Bitmask view of a graph with at most 63 vertices.
struct MaskGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> children;  // children[v]: ranges of edges out of v
  std::uint64_t regular = 0;            // bit v set iff v is a regular vertex
};

MaskGraph to_masks(const Graph& g);

/// Hereditary saturated subsets as bitmasks, ascending numerically.
std::vector<std::uint64_t> hereditary_saturated_masks_serial(const MaskGraph& g);
std::vector<std::uint64_t> hereditary_saturated_masks_parallel(const MaskGraph& g);

/// Row-major ≤′ matrix over the given pairs.
std::vector<std::uint8_t> order_matrix_serial(std::span<const AdmissiblePair> pairs);
std::vector<std::uint8_t> order_matrix_parallel(std::span<const AdmissiblePair> pairs);

/// Least upper bounds (or greatest lower bounds) from an order matrix whose
/// element order is a linear extension. Throws std::logic_error if some pair
/// has no lub/glb.
std::vector<std::size_t> lub_table_serial(std::span<const std::uint8_t> order, std::size_t n);
std::vector<std::size_t> lub_table_parallel(std::span<const std::uint8_t> order, std::size_t n);
std::vector<std::size_t> glb_table_serial(std::span<const std::uint8_t> order, std::size_t n);
std::vector<std::size_t> glb_table_parallel(std::span<const std::uint8_t> order, std::size_t n);

}  // namespace lpa::kernels

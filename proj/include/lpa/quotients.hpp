#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/constructions.hpp"
#include "lpa/graded_ideal.hpp"

namespace lpa {

/// The hypotheses of a quotient description do not hold for the given input.
class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which result licenses a printed claim about L_R(E)/A.
enum class Licence {
  /// L_R(E)/A ≅ L_{R/I}(E\(H,S)) for I-basic A.
  IBasicQuotient,
  /// Row-finite E: L_R(E)/A ≅ ⊕_I L_{R/I}(_{φ^{-1}(I)}E).
  PorcupineDecomposition,
  /// L_{R/I}(E\(H,S)) maps onto L_R(E)/A; no isomorphism claimed.
  EpimorphismOnly,
};

std::string_view to_string(Licence l);

struct IBasicResult {
  IdealClass classification;
  /// H = A ∩ E^0, S = {v ∈ B_H : v^H ∈ A}.
  AdmissiblePair pair;
  /// I = f((E^0, ∅)).
  PrincipalIdeal ideal;
  RingSpec quotient_ring;
  QuotientGraph graph;
  AlgebraDescriptor algebra;
  Licence licence = Licence::IBasicQuotient;
};

/// Quotient by an I-basic (or basic) graded ideal through the quotient
/// graph. Throws NotApplicable for a general graded ideal.
IBasicResult quotient_ibasic(const PairLattice& lattice, const SaturatedFn& f);

/// Same data for any graded ideal; the licence drops to EpimorphismOnly
/// when the ideal is not I-basic.
IBasicResult epimorphism_data(const PairLattice& lattice, const SaturatedFn& f);

struct Summand {
  PrincipalIdeal ideal;
  RingSpec ring;
  /// φ^{-1}(I) ∩ E^0.
  VertexSet x;
  PorcupineGraph graph;
  AlgebraDescriptor algebra;
  /// R/I is the zero ring.
  bool vanishing = false;
};

struct Decomposition {
  /// One summand per I ∈ Im(φ), ascending by generator.
  std::vector<Summand> summands;
  Licence licence = Licence::PorcupineDecomposition;

  std::size_t nonvanishing() const;
  /// Direct sum of the non-vanishing summands' descriptors.
  AlgebraDescriptor algebra() const;
};

/// Decomposition of L_R(E)/A for row-finite E. Throws NotRowFinite for
/// infinite bundles and std::invalid_argument for an invalid φ.
Decomposition decompose(const PairLattice& lattice, const GradedIdealFn& phi, std::size_t depth,
                        bool parallel = true);

struct ConsistencyVerdict {
  bool consistent = false;
  std::string reason;
  Graph quotient;
  std::optional<Graph> porcupine;
  /// Vertex images from the porcupine graph into the quotient graph.
  std::optional<std::vector<VertexId>> isomorphism;
};

/// For basic or I-basic f on a row-finite graph, checks that the
/// decomposition has a single non-vanishing summand over R/I whose graph is
/// isomorphic to E\(H,∅). Throws NotApplicable outside that domain.
ConsistencyVerdict cross_check(const PairLattice& lattice, const SaturatedFn& f,
                               std::size_t depth);

/// "L_Z(E)/A ≅ M_3(Z_p) (+) M_3(Z_q)".
std::string pretty_quotient(const Graph& g, const RingSpec& ring, const AlgebraDescriptor& d,
                            const SymbolTable& symbols = {});

}  // namespace lpa

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpa/ideal.hpp"
#include "lpa/lattice.hpp"

namespace lpa {

/// Thrown when an f or φ assignment misses part of its domain.
class PartialAssignment : public std::invalid_argument {
 public:
  PartialAssignment(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

/// Saturated function T_E* -> L(R). Values are indexed like the lattice
/// elements; the slot of (∅,∅) holds R, the empty intersection.
struct SaturatedFn {
  RingSpec ring = RingSpec::integers();
  std::vector<PrincipalIdeal> values;

  const PrincipalIdeal& operator[](std::size_t pair_index) const { return values.at(pair_index); }
  friend bool operator==(const SaturatedFn&, const SaturatedFn&) = default;
};

/// Graded ideal function (Ê)^0 -> L(R), indexed like
/// PairLattice::extended_vertices().
struct GradedIdealFn {
  RingSpec ring = RingSpec::integers();
  std::vector<PrincipalIdeal> values;

  const PrincipalIdeal& operator[](std::size_t x_index) const { return values.at(x_index); }
  friend bool operator==(const GradedIdealFn&, const GradedIdealFn&) = default;
};

/// Builds f from an assignment over T_E*. Every nonzero pair must appear
/// exactly once; a missing pair throws PartialAssignment.
SaturatedFn make_saturated_fn(const PairLattice& lattice, const RingSpec& ring,
                              std::span<const std::pair<AdmissiblePair, PrincipalIdeal>> assignment);
GradedIdealFn make_graded_ideal_fn(
    const PairLattice& lattice, const RingSpec& ring,
    std::span<const std::pair<ExtendedVertex, PrincipalIdeal>> assignment);

SaturatedFn constant_saturated_fn(const PairLattice& lattice, const PrincipalIdeal& value);

/// f(p) = ∩ of the given values over the join-irreducibles below p. On the
/// distributive lattice T_E this yields every saturated function exactly
/// once as the values range over f restricted to the join-irreducibles.
SaturatedFn saturated_from_irreducibles(const PairLattice& lattice, const RingSpec& ring,
                                        std::span<const PrincipalIdeal> irreducible_values);
/// Join-irreducible elements of T_E (exactly one lower cover).
std::vector<std::size_t> join_irreducibles(const PairLattice& lattice);

struct Violation {
  std::string clause;
  std::string witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks f(p ∨ q) = f(p) ∩ f(q) on all pairs of T_E*.
ValidationReport validate_saturated(const PairLattice& lattice, const SaturatedFn& f);

/// φ_f(u) = f((H_u, ∅)), φ_f(v^H) = f((H, {v})). Throws std::invalid_argument
/// if f is not saturated.
GradedIdealFn phi_from_f(const PairLattice& lattice, const SaturatedFn& f);

/// f_φ(H, S) = ∩_{u ∈ H} φ(u) ∩ ∩_{v ∈ S} φ(v^H).
SaturatedFn f_from_phi(const PairLattice& lattice, const GradedIdealFn& phi);

/// Clauses, with φ(H) = ∩_{w ∈ H} φ(w):
/// (a) x ≥ y ⟹ φ(x) ⊆ φ(y) on E^0, and u ≥ v ⟹ φ(u) ∩ φ(H) ⊆ φ(v^H);
/// (b) φ(u) = ∩ over H_u; (c) φ(v) ∩ φ(H) ⊆ φ(v^H) ⊆ φ(H);
/// (d) f_φ saturated and φ_{f_φ} = φ.
ValidationReport validate_phi(const PairLattice& lattice, const GradedIdealFn& phi);

struct IdealClass {
  enum class Kind { Basic, IBasic, GeneralGraded };
  Kind kind = Kind::Basic;
  /// I for IBasic; {0} for Basic.
  std::optional<PrincipalIdeal> ideal;
  /// Im(f) over T_E*, sorted by generator.
  std::vector<PrincipalIdeal> image;
};

std::string to_string(const IdealClass& c, const SymbolTable& symbols = {});

/// Basic takes precedence over IBasic when Im(f) ⊆ {{0}, R}.
IdealClass classify(const PairLattice& lattice, const SaturatedFn& f);

/// k·x ∈ A for the graded ideal A of φ. For x = v^H this also requires
/// k·u ∈ A for every u ∈ H.
bool membership(const PairLattice& lattice, const GradedIdealFn& phi, std::int64_t k,
                const ExtendedVertex& x);

struct MaxBasic {
  AdmissiblePair pair;
  /// True when the maximal basic part is (∅,∅).
  bool zero_basic_part = false;
};

/// (H, S) with H = {v : φ_f(v) = R}, S = {v ∈ B_H : φ_f(v^H) = R}; every
/// pair with f = R is checked to lie below it (std::logic_error otherwise).
MaxBasic max_basic_pair(const PairLattice& lattice, const SaturatedFn& f);

/// Pointwise inclusion orders.
bool fn_leq(const SaturatedFn& a, const SaturatedFn& b);
bool fn_leq(const GradedIdealFn& a, const GradedIdealFn& b);

}  // namespace lpa

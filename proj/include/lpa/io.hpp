#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lpa/constructions.hpp"
#include "lpa/cycles.hpp"
#include "lpa/graded_ideal.hpp"
#include "lpa/quotients.hpp"

namespace lpa::io {

using nlohmann::json;

/// Input that is not well-formed JSON or does not follow the schema.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::filesystem::path& path);

/// {"name"?, "vertices":[...], "edges":[{"id","src","dst","mult": n | "inf"}]}.
Graph parse_graph(const json& j, const std::string& default_name = "E");
json to_json(const Graph& g);
Graph load_graph(const std::filesystem::path& path);

/// Vertex labels plus "xN" / "x∞" on multi-edge bundles.
std::string to_dot(const Graph& g);

/// "Z", {"Zn": n} or "0".
RingSpec parse_ring(const json& j);
json to_json(const RingSpec& r);
/// {"ring": ..., "gen": g}.
PrincipalIdeal parse_ideal(const json& j);
json to_json(const PrincipalIdeal& i);

VertexSet parse_vertex_set(const Graph& g, const json& names);
json to_json(const Graph& g, const VertexSet& set);
json to_json(const Graph& g, const AdmissiblePair& p);

/// [{"pair":{"H":[...],"S":[...]}, "ideal": ...}, ...]. The ring is taken
/// from the entries, which must agree.
SaturatedFn parse_saturated_fn(const PairLattice& lattice, const json& j);
json to_json(const PairLattice& lattice, const SaturatedFn& f);

/// [{"vertex":"u", "ideal": ...} | {"broken":{"v":"u","H":[...]}, "ideal": ...}, ...].
GradedIdealFn parse_graded_ideal_fn(const PairLattice& lattice, const json& j);
json to_json(const PairLattice& lattice, const GradedIdealFn& phi);

/// Lattice of hereditary saturated sets ordered by inclusion.
json hs_lattice_to_json(const PairLattice& lattice);
std::string hs_lattice_to_dot(const PairLattice& lattice);
/// T_E* with its cover relation.
json pairs_to_json(const PairLattice& lattice);
std::string pairs_to_dot(const PairLattice& lattice);

json to_json(const Graph& g, const Cycle& c);
json to_json(const ValidationReport& r);
json to_json(const IdealClass& c, const SymbolTable& symbols = {});
json to_json(const QuotientGraph& q);
json to_json(const PorcupineGraph& p);
json to_json(const AlgebraDescriptor& d, const SymbolTable& symbols = {});
json to_json(const Graph& g, const IBasicResult& r, const SymbolTable& symbols = {});
json to_json(const Graph& g, const Decomposition& d, const SymbolTable& symbols = {});
json to_json(const ConsistencyVerdict& v);

}  // namespace lpa::io

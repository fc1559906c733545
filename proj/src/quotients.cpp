#include "lpa/quotients.hpp"

#include <algorithm>
#include <exception>

namespace lpa {

std::string_view to_string(Licence l) {
  switch (l) {
    case Licence::IBasicQuotient: return "ibasic-quotient-graph";
    case Licence::PorcupineDecomposition: return "porcupine-decomposition";
    case Licence::EpimorphismOnly: return "epimorphism-only";
  }
  return "?";
}

namespace {

AlgebraDescriptor describe(const Graph& g, const RingSpec& ring, bool infinite = false) {
  if (ring.is_zero()) return {};
  if (infinite || !g.row_finite()) {
    AlgebraTerm t;
    t.kind = AlgebraTerm::Kind::NamedLPA;
    t.ring = ring;
    t.graph_name = g.name();
    t.infinite_graph = infinite;
    return AlgebraDescriptor{{t}};
  }
  return recognize(g, ring);
}

IBasicResult quotient_data(const PairLattice& lattice, const SaturatedFn& f,
                           const IdealClass& cls) {
  const Graph& g = lattice.graph();
  const auto top = f[lattice.top()];
  const auto basic = max_basic_pair(lattice, f);
  IBasicResult out{cls,
                   basic.pair,
                   top,
                   quotient_ring(f.ring, top),
                   quotient_graph(g, basic.pair),
                   {},
                   Licence::IBasicQuotient};
  out.algebra = describe(out.graph.graph, out.quotient_ring);
  return out;
}

}  // namespace

IBasicResult quotient_ibasic(const PairLattice& lattice, const SaturatedFn& f) {
  const auto cls = classify(lattice, f);
  if (cls.kind == IdealClass::Kind::GeneralGraded)
    throw NotApplicable("the graded ideal is neither basic nor I-basic: Im(f) = " +
                        [&] {
                          std::string s;
                          for (const auto& i : cls.image) s += (s.empty() ? "{" : ", ") + to_string(i);
                          return s + "}";
                        }());
  return quotient_data(lattice, f, cls);
}

IBasicResult epimorphism_data(const PairLattice& lattice, const SaturatedFn& f) {
  const auto cls = classify(lattice, f);
  auto out = quotient_data(lattice, f, cls);
  if (cls.kind == IdealClass::Kind::GeneralGraded) out.licence = Licence::EpimorphismOnly;
  return out;
}

std::size_t Decomposition::nonvanishing() const {
  return static_cast<std::size_t>(
      std::count_if(summands.begin(), summands.end(), [](const Summand& s) { return !s.vanishing; }));
}

AlgebraDescriptor Decomposition::algebra() const {
  AlgebraDescriptor out;
  for (const auto& s : summands)
    out.terms.insert(out.terms.end(), s.algebra.terms.begin(), s.algebra.terms.end());
  return out;
}

Decomposition decompose(const PairLattice& lattice, const GradedIdealFn& phi, std::size_t depth,
                        bool parallel) {
  const Graph& g = lattice.graph();
  for (const auto& e : g.edges())
    if (e.mult.is_infinite())
      throw NotRowFinite("graph '" + g.name() + "' is not row-finite: bundle '" + e.id +
                         "' has infinitely many edges; the porcupine decomposition needs a "
                         "row-finite graph");
  const auto report = validate_phi(lattice, phi);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw std::invalid_argument("phi violates clause (" + v.clause + ") at " + v.witness + ": " +
                                v.detail);
  }

  std::vector<PrincipalIdeal> image;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (std::find(image.begin(), image.end(), phi[v]) == image.end()) image.push_back(phi[v]);
  std::sort(image.begin(), image.end(),
            [](const auto& a, const auto& b) { return a.generator() < b.generator(); });

  std::vector<std::optional<Summand>> slots(image.size());
  std::vector<std::exception_ptr> errors(image.size());
  const auto n = static_cast<std::ptrdiff_t>(image.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      const auto& ideal = image[static_cast<std::size_t>(i)];
      VertexSet x = g.empty_set();
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (phi[v] == ideal) x.set(v);
      const auto ring = quotient_ring(phi.ring, ideal);
      auto graph = porcupine(g, x, depth);
      auto algebra = describe(graph.graph, ring, graph.infinite);
      slots[static_cast<std::size_t>(i)] =
          Summand{ideal, ring, std::move(x), std::move(graph), std::move(algebra), ring.is_zero()};
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Decomposition out;
  for (auto& s : slots) out.summands.push_back(std::move(*s));
  return out;
}

ConsistencyVerdict cross_check(const PairLattice& lattice, const SaturatedFn& f,
                               std::size_t depth) {
  const Graph& g = lattice.graph();
  if (!g.row_finite()) throw NotRowFinite("cross-check needs a row-finite graph");
  const auto ib = quotient_ibasic(lattice, f);
  const auto dec = decompose(lattice, phi_from_f(lattice, f), depth);

  ConsistencyVerdict out;
  out.quotient = quotient_graph(g, AdmissiblePair{ib.pair.h, g.empty_set()}).graph;
  std::vector<const Summand*> live;
  for (const auto& s : dec.summands)
    if (!s.vanishing) live.push_back(&s);

  if (ib.quotient_ring.is_zero()) {
    out.consistent = live.empty();
    out.reason = out.consistent ? "both sides are the zero algebra"
                                : "quotient ring is zero but a summand survives";
    return out;
  }
  if (live.size() != 1) {
    out.reason = "expected one non-vanishing summand, found " + std::to_string(live.size());
    return out;
  }
  const Summand& s = *live.front();
  out.porcupine = s.graph.graph;
  if (s.ring != ib.quotient_ring) {
    out.reason = "coefficient rings differ: " + to_string(s.ring) + " vs " +
                 to_string(ib.quotient_ring);
    return out;
  }
  if (s.graph.infinite) {
    out.reason = "porcupine graph is infinite; truncated at depth " + std::to_string(depth);
    return out;
  }
  out.isomorphism = find_isomorphism(s.graph.graph, out.quotient);
  out.consistent = out.isomorphism.has_value();
  out.reason = out.consistent ? "porcupine graph is isomorphic to the quotient graph"
                              : "porcupine graph is not isomorphic to the quotient graph";
  return out;
}

std::string pretty_quotient(const Graph& g, const RingSpec& ring, const AlgebraDescriptor& d,
                            const SymbolTable& symbols) {
  return lpa_symbol(ring, symbols) + "(" + g.name() + ")/A ≅ " + to_string(d, symbols);
}

}  // namespace lpa

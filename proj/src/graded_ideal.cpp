#include "lpa/graded_ideal.hpp"

#include <algorithm>

namespace lpa {

namespace {

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

void require_ring(const RingSpec& expected, const PrincipalIdeal& value, const std::string& where) {
  if (!(value.ring() == expected))
    throw RingMismatch("value at " + where + " is an ideal of " + to_string(value.ring()) +
                       ", expected " + to_string(expected));
}

std::size_t broken_index(const PairLattice& lattice, VertexId v, const VertexSet& h) {
  auto i = lattice.extended_index(ExtendedVertex{v, h});
  if (!i) throw std::logic_error("missing v^H in the extended vertex domain");
  return *i;
}

}  // namespace

PartialAssignment::PartialAssignment(std::vector<std::string> missing)
    : std::invalid_argument("assignment is partial; missing: " + join_names(missing)),
      missing_(std::move(missing)) {}

SaturatedFn make_saturated_fn(const PairLattice& lattice, const RingSpec& ring,
                              std::span<const std::pair<AdmissiblePair, PrincipalIdeal>> assignment) {
  const auto& g = lattice.graph();
  std::vector<std::optional<PrincipalIdeal>> slots(lattice.size());
  slots[lattice.minimum()] = PrincipalIdeal::whole(ring);
  for (const auto& [pair, value] : assignment) {
    const auto i = lattice.index_of(pair);
    const auto where = to_string(g, pair);
    if (i == lattice.minimum()) throw std::invalid_argument("(∅,∅) is not in T_E*");
    if (slots[i]) throw std::invalid_argument("pair " + where + " assigned twice");
    require_ring(ring, value, where);
    slots[i] = value;
  }
  std::vector<std::string> missing;
  SaturatedFn f{ring, {}};
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      missing.push_back(to_string(g, lattice[i]));
    } else {
      f.values.push_back(*slots[i]);
    }
  }
  if (!missing.empty()) throw PartialAssignment(std::move(missing));
  return f;
}

GradedIdealFn make_graded_ideal_fn(
    const PairLattice& lattice, const RingSpec& ring,
    std::span<const std::pair<ExtendedVertex, PrincipalIdeal>> assignment) {
  const auto& g = lattice.graph();
  const auto& domain = lattice.extended_vertices();
  std::vector<std::optional<PrincipalIdeal>> slots(domain.size());
  for (const auto& [x, value] : assignment) {
    const auto where = to_string(g, x);
    auto i = lattice.extended_index(x);
    if (!i) throw std::invalid_argument(where + " is not an element of the extended vertex set");
    if (slots[*i]) throw std::invalid_argument(where + " assigned twice");
    require_ring(ring, value, where);
    slots[*i] = value;
  }
  std::vector<std::string> missing;
  GradedIdealFn phi{ring, {}};
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      missing.push_back(to_string(g, domain[i]));
    } else {
      phi.values.push_back(*slots[i]);
    }
  }
  if (!missing.empty()) throw PartialAssignment(std::move(missing));
  return phi;
}

SaturatedFn constant_saturated_fn(const PairLattice& lattice, const PrincipalIdeal& value) {
  SaturatedFn f{value.ring(), std::vector<PrincipalIdeal>(lattice.size(), value)};
  f.values[lattice.minimum()] = PrincipalIdeal::whole(value.ring());
  return f;
}

std::vector<std::size_t> join_irreducibles(const PairLattice& lattice) {
  std::vector<std::size_t> lower_covers(lattice.size(), 0);
  for (const auto& [lower, upper] : lattice.covers()) ++lower_covers[upper];
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lower_covers[i] == 1) out.push_back(i);
  return out;
}

SaturatedFn saturated_from_irreducibles(const PairLattice& lattice, const RingSpec& ring,
                                        std::span<const PrincipalIdeal> irreducible_values) {
  const auto irreducibles = join_irreducibles(lattice);
  if (irreducibles.size() != irreducible_values.size())
    throw std::invalid_argument("one value per join-irreducible element is required");
  SaturatedFn f{ring, std::vector<PrincipalIdeal>(lattice.size(), PrincipalIdeal::whole(ring))};
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t k = 0; k < irreducibles.size(); ++k)
      if (lattice.leq(irreducibles[k], i)) {
        require_ring(ring, irreducible_values[k], "join-irreducible");
        f.values[i] = ideal_meet(f.values[i], irreducible_values[k]);
      }
  return f;
}

ValidationReport validate_saturated(const PairLattice& lattice, const SaturatedFn& f) {
  if (f.values.size() != lattice.size())
    throw std::invalid_argument("saturated function does not match the lattice");
  const auto& g = lattice.graph();
  ValidationReport report;
  const auto nonzero = lattice.nonzero();
  for (std::size_t a : nonzero)
    for (std::size_t b : nonzero) {
      if (b < a) continue;
      const auto joined = lattice.join(a, b);
      const auto lhs = f[joined];
      const auto rhs = ideal_meet(f[a], f[b]);
      if (lhs == rhs) continue;
      report.violations.push_back(Violation{
          "join",
          to_string(g, lattice[a]) + " v " + to_string(g, lattice[b]) + " = " +
              to_string(g, lattice[joined]),
          "f(join) = " + to_string(lhs) + " but f(p1) ∩ f(p2) = " + to_string(rhs)});
    }
  return report;
}

GradedIdealFn phi_from_f(const PairLattice& lattice, const SaturatedFn& f) {
  if (!validate_saturated(lattice, f).ok())
    throw std::invalid_argument("f is not a saturated function");
  const auto& g = lattice.graph();
  GradedIdealFn phi{f.ring, {}};
  for (const auto& x : lattice.extended_vertices()) {
    AdmissiblePair pair = x.is_broken()
                              ? AdmissiblePair{*x.broken_by, g.empty_set()}
                              : AdmissiblePair{lattice.hv(x.vertex), g.empty_set()};
    if (x.is_broken()) pair.s.set(x.vertex);
    phi.values.push_back(f[lattice.index_of(pair)]);
  }
  return phi;
}

SaturatedFn f_from_phi(const PairLattice& lattice, const GradedIdealFn& phi) {
  if (phi.values.size() != lattice.extended_vertices().size())
    throw std::invalid_argument("graded ideal function does not match the lattice");
  SaturatedFn f{phi.ring, {}};
  f.values.reserve(lattice.size());
  for (const auto& [h, s] : lattice.elements()) {
    auto value = PrincipalIdeal::whole(phi.ring);
    for (VertexId u : members(h)) value = ideal_meet(value, phi[u]);
    for (VertexId v : members(s)) value = ideal_meet(value, phi[broken_index(lattice, v, h)]);
    f.values.push_back(value);
  }
  return f;
}

ValidationReport validate_phi(const PairLattice& lattice, const GradedIdealFn& phi) {
  const auto& g = lattice.graph();
  const auto& domain = lattice.extended_vertices();
  if (phi.values.size() != domain.size())
    throw std::invalid_argument("graded ideal function does not match the lattice");
  ValidationReport report;
  auto name = [&](std::size_t i) { return to_string(g, domain[i]); };
  auto inclusion = [&](std::size_t x, std::size_t y) {
    return "phi(" + name(x) + ") = " + to_string(phi[x]) + ", phi(" + name(y) +
           ") = " + to_string(phi[y]);
  };

  // ∩_{w ∈ H} phi(w) for the H of each v^H.
  std::vector<PrincipalIdeal> below(domain.size(), PrincipalIdeal::whole(phi.ring));
  for (std::size_t x = g.vertex_count(); x < domain.size(); ++x)
    for (VertexId w : members(*domain[x].broken_by)) below[x] = ideal_meet(below[x], phi[w]);

  // (a) x >= y implies phi(x) ⊆ phi(y); for y = v^H the H-part is added to phi(x).
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto reach = tree(g, u);
    for (std::size_t y = 0; y < domain.size(); ++y) {
      if (!reach.test(domain[y].vertex) || y == u) continue;
      const auto lhs = domain[y].is_broken() ? ideal_meet(phi[u], below[y]) : phi[u];
      if (!ideal_leq(lhs, phi[y]))
        report.violations.push_back(
            Violation{"a", name(u) + " >= " + name(y), inclusion(u, y) + "; expected phi(" +
                                                          name(u) + ") ⊆ phi(" + name(y) + ")"});
    }
  }
  // (b) phi(u) = ∩_{w ∈ H_u} phi(w).
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto meet = PrincipalIdeal::whole(phi.ring);
    for (VertexId w : members(lattice.hv(u))) meet = ideal_meet(meet, phi[w]);
    if (!(meet == phi[u]))
      report.violations.push_back(Violation{
          "b", name(u), "phi(u) = " + to_string(phi[u]) + " but ∩ over H_u = " + to_string(meet)});
  }
  // (c) phi(v) ∩ phi(H) ⊆ phi(v^H) ⊆ phi(H), phi(H) = ∩_{w ∈ H} phi(w).
  for (std::size_t x = g.vertex_count(); x < domain.size(); ++x) {
    const VertexId v = domain[x].vertex;
    if (!ideal_leq(ideal_meet(phi[v], below[x]), phi[x]))
      report.violations.push_back(Violation{"c", name(x), inclusion(v, x) + ", ∩ over H = " +
                                                              to_string(below[x])});
    if (!ideal_leq(phi[x], below[x]))
      report.violations.push_back(Violation{"c", name(x), "phi(" + name(x) + ") = " +
                                                              to_string(phi[x]) + " ⊄ ∩ over H = " +
                                                              to_string(below[x])});
  }
  // (d) f_phi is saturated and phi_{f_phi} = phi.
  const auto f = f_from_phi(lattice, phi);
  const auto saturated = validate_saturated(lattice, f);
  for (const auto& v : saturated.violations)
    report.violations.push_back(Violation{"d", v.witness, "f_phi not saturated: " + v.detail});
  if (saturated.ok()) {
    const auto back = phi_from_f(lattice, f);
    for (std::size_t x = 0; x < domain.size(); ++x)
      if (!(back[x] == phi[x]))
        report.violations.push_back(Violation{"d", name(x),
                                              "phi_{f_phi} = " + to_string(back[x]) +
                                                  " differs from phi = " + to_string(phi[x])});
  }
  return report;
}

std::string to_string(const IdealClass& c, const SymbolTable& symbols) {
  switch (c.kind) {
    case IdealClass::Kind::Basic:
      return "Basic";
    case IdealClass::Kind::IBasic:
      return "IBasic(" + to_string(*c.ideal, symbols) + ")";
    case IdealClass::Kind::GeneralGraded:
      return "GeneralGraded";
  }
  return "?";
}

IdealClass classify(const PairLattice& lattice, const SaturatedFn& f) {
  if (!validate_saturated(lattice, f).ok())
    throw std::invalid_argument("f is not a saturated function");
  IdealClass out;
  for (std::size_t i : lattice.nonzero())
    if (std::find(out.image.begin(), out.image.end(), f[i]) == out.image.end())
      out.image.push_back(f[i]);
  std::sort(out.image.begin(), out.image.end(),
            [](const PrincipalIdeal& a, const PrincipalIdeal& b) {
              return a.generator() < b.generator();
            });

  const bool basic = std::all_of(out.image.begin(), out.image.end(), [](const auto& i) {
    return i.is_whole() || i.is_zero();
  });
  if (basic) {
    out.kind = IdealClass::Kind::Basic;
    out.ideal = PrincipalIdeal::zero(f.ring);
    return out;
  }
  const auto& bottom = f[lattice.top()];
  const bool ibasic = std::all_of(out.image.begin(), out.image.end(), [&](const auto& i) {
    return i.is_whole() || i == bottom;
  });
  if (ibasic) {
    out.kind = IdealClass::Kind::IBasic;
    out.ideal = bottom;
    return out;
  }
  out.kind = IdealClass::Kind::GeneralGraded;
  return out;
}

bool membership(const PairLattice& lattice, const GradedIdealFn& phi, std::int64_t k,
                const ExtendedVertex& x) {
  auto i = lattice.extended_index(x);
  if (!i)
    throw std::invalid_argument(to_string(lattice.graph(), x) +
                                " is not an element of the extended vertex set");
  if (!phi[*i].contains(k)) return false;
  if (x.is_broken())
    for (VertexId u : members(*x.broken_by))
      if (!phi[u].contains(k)) return false;
  return true;
}

MaxBasic max_basic_pair(const PairLattice& lattice, const SaturatedFn& f) {
  const auto& g = lattice.graph();
  const auto phi = phi_from_f(lattice, f);
  VertexSet h = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (phi[v].is_whole()) h.set(v);
  if (!is_hereditary_saturated(g, h))
    throw std::logic_error("vertices with phi = R do not form a hereditary saturated set");
  VertexSet s = g.empty_set();
  for (VertexId v : members(detail::breaking_of_hereditary(g, h)))
    if (phi[broken_index(lattice, v, h)].is_whole()) s.set(v);

  MaxBasic out{AdmissiblePair{h, s}, h.none() && s.none()};
  const auto top = lattice.index_of(out.pair);
  for (std::size_t i : lattice.nonzero())
    if (f[i].is_whole() && !lattice.leq(i, top))
      throw std::logic_error("pair " + to_string(g, lattice[i]) +
                             " has f = R but is not below the maximal basic pair");
  return out;
}

bool fn_leq(const SaturatedFn& a, const SaturatedFn& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("domain mismatch");
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!ideal_leq(a[i], b[i])) return false;
  return true;
}

bool fn_leq(const GradedIdealFn& a, const GradedIdealFn& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("domain mismatch");
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!ideal_leq(a[i], b[i])) return false;
  return true;
}

}  // namespace lpa

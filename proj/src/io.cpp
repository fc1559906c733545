#include "lpa/io.hpp"

#include <fstream>
#include <sstream>

namespace lpa::io {

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw MalformedInput(std::string(what) + " is missing \"" + key + "\"");
  return j.at(key);
}

std::string string_field(const json& j, const char* key, const char* what) {
  const auto& v = field(j, key, what);
  if (!v.is_string()) throw MalformedInput(std::string(what) + " \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

json pair_list(const PairLattice& lattice, const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (auto i : indices) {
    json e = to_json(lattice.graph(), lattice[i]);
    e["index"] = i;
    e["label"] = to_string(lattice.graph(), lattice[i]);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> nonzero_covers(const PairLattice& lattice) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [a, b] : lattice.covers())
    if (a != lattice.minimum()) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> hs_covers(const PairLattice& lattice) {
  const auto& hs = lattice.hereditary_saturated_sets();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < hs.size(); ++a)
    for (std::size_t b = 0; b < hs.size(); ++b) {
      if (a == b || !hs[a].is_proper_subset_of(hs[b])) continue;
      bool direct = true;
      for (std::size_t c = 0; c < hs.size() && direct; ++c)
        if (hs[a].is_proper_subset_of(hs[c]) && hs[c].is_proper_subset_of(hs[b])) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

std::string braced(const Graph& g, const VertexSet& set) {
  std::string out;
  for (const auto& n : g.names_of(set)) out += (out.empty() ? "" : ",") + n;
  return "{" + out + "}";
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

Graph parse_graph(const json& j, const std::string& default_name) {
  const auto& vs = field(j, "vertices", "graph");
  const auto& es = field(j, "edges", "graph");
  if (!vs.is_array() || !es.is_array()) throw MalformedInput("graph vertices and edges must be arrays");
  std::vector<std::string> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) throw MalformedInput("vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : es) {
    EdgeSpec spec{string_field(e, "id", "edge"), string_field(e, "src", "edge"),
                  string_field(e, "dst", "edge"), Multiplicity(1)};
    if (e.contains("mult")) {
      const auto& m = e.at("mult");
      if (m.is_string() && m.get<std::string>() == "inf") {
        spec.mult = Multiplicity::infinite();
      } else if (m.is_number_integer() && m.get<std::int64_t>() >= 1) {
        spec.mult = Multiplicity(m.get<std::uint64_t>());
      } else {
        throw MalformedInput("edge '" + spec.id + "': mult must be a positive integer or \"inf\"");
      }
    }
    edges.push_back(std::move(spec));
  }
  std::string name = default_name;
  if (j.contains("name")) name = string_field(j, "name", "graph");
  try {
    return Graph(std::move(vertices), std::move(edges), name);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json m = e.mult.is_infinite() ? json("inf") : json(e.mult.count());
    edges.push_back(
        {{"id", e.id}, {"src", g.vertex_name(e.src)}, {"dst", g.vertex_name(e.dst)}, {"mult", m}});
  }
  return {{"name", g.name()}, {"vertices", g.vertex_names()}, {"edges", edges}};
}

Graph load_graph(const std::filesystem::path& path) { return parse_graph(read_json(path)); }

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "digraph " << quoted(g.name()) << " {\n";
  for (const auto& v : g.vertex_names()) out << "  " << quoted(v) << " [label=" << quoted(v) << "];\n";
  for (const auto& e : g.edges()) {
    std::string label = e.id;
    if (e.mult.is_infinite()) {
      label += " x∞";
    } else if (e.mult.count() != 1) {
      label += " x" + std::to_string(e.mult.count());
    }
    out << "  " << quoted(g.vertex_name(e.src)) << " -> " << quoted(g.vertex_name(e.dst))
        << " [label=" << quoted(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

RingSpec parse_ring(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Z") return RingSpec::integers();
    if (s == "0") return RingSpec::zero();
    throw MalformedInput("unknown ring \"" + s + "\"");
  }
  if (j.is_object() && j.contains("Zn")) {
    const auto& n = j.at("Zn");
    if (!n.is_number_integer() || n.get<std::int64_t>() < 2)
      throw MalformedInput("Zn modulus must be an integer >= 2");
    return RingSpec::modular(n.get<std::uint64_t>());
  }
  throw MalformedInput("ring must be \"Z\" or {\"Zn\": n}");
}

json to_json(const RingSpec& r) {
  switch (r.kind()) {
    case RingSpec::Kind::Integers: return "Z";
    case RingSpec::Kind::Modular: return {{"Zn", r.modulus()}};
    case RingSpec::Kind::Zero: return "0";
  }
  return nullptr;
}

PrincipalIdeal parse_ideal(const json& j) {
  const auto ring = parse_ring(field(j, "ring", "ideal"));
  const auto& gen = field(j, "gen", "ideal");
  if (!gen.is_number_integer()) throw MalformedInput("ideal gen must be an integer");
  const auto g = gen.get<std::int64_t>();
  return PrincipalIdeal(ring, static_cast<std::uint64_t>(g < 0 ? -g : g));
}

json to_json(const PrincipalIdeal& i) {
  return {{"ring", to_json(i.ring())}, {"gen", i.generator()}};
}

VertexSet parse_vertex_set(const Graph& g, const json& names) {
  if (!names.is_array()) throw MalformedInput("vertex set must be an array of names");
  VertexSet out = g.empty_set();
  for (const auto& n : names) {
    if (!n.is_string()) throw MalformedInput("vertex names must be strings");
    auto v = g.find_vertex(n.get<std::string>());
    if (!v) throw MalformedInput("unknown vertex '" + n.get<std::string>() + "'");
    out.set(*v);
  }
  return out;
}

json to_json(const Graph& g, const VertexSet& set) { return g.names_of(set); }

json to_json(const Graph& g, const AdmissiblePair& p) {
  return {{"H", to_json(g, p.h)}, {"S", to_json(g, p.s)}};
}

SaturatedFn parse_saturated_fn(const PairLattice& lattice, const json& j) {
  if (!j.is_array()) throw MalformedInput("f must be an array of {pair, ideal} entries");
  const auto& g = lattice.graph();
  std::vector<std::pair<AdmissiblePair, PrincipalIdeal>> entries;
  for (const auto& e : j) {
    const auto& p = field(e, "pair", "f entry");
    AdmissiblePair pair{parse_vertex_set(g, field(p, "H", "pair")),
                        parse_vertex_set(g, field(p, "S", "pair"))};
    entries.emplace_back(std::move(pair), parse_ideal(field(e, "ideal", "f entry")));
  }
  const RingSpec ring = entries.empty() ? RingSpec::integers() : entries.front().second.ring();
  for (const auto& [pair, ideal] : entries)
    if (!(ideal.ring() == ring)) throw MalformedInput("f mixes ideals of different rings");
  return make_saturated_fn(lattice, ring, entries);
}

json to_json(const PairLattice& lattice, const SaturatedFn& f) {
  json out = json::array();
  for (auto i : lattice.nonzero())
    out.push_back({{"pair", to_json(lattice.graph(), lattice[i])}, {"ideal", to_json(f[i])}});
  return out;
}

GradedIdealFn parse_graded_ideal_fn(const PairLattice& lattice, const json& j) {
  if (!j.is_array()) throw MalformedInput("phi must be an array of {vertex|broken, ideal} entries");
  const auto& g = lattice.graph();
  std::vector<std::pair<ExtendedVertex, PrincipalIdeal>> entries;
  for (const auto& e : j) {
    ExtendedVertex x;
    if (e.contains("vertex")) {
      const auto name = string_field(e, "vertex", "phi entry");
      auto v = g.find_vertex(name);
      if (!v) throw MalformedInput("unknown vertex '" + name + "'");
      x.vertex = *v;
    } else if (e.contains("broken")) {
      const auto& b = e.at("broken");
      const auto name = string_field(b, "v", "broken vertex");
      auto v = g.find_vertex(name);
      if (!v) throw MalformedInput("unknown vertex '" + name + "'");
      x.vertex = *v;
      x.broken_by = parse_vertex_set(g, field(b, "H", "broken vertex"));
    } else {
      throw MalformedInput("phi entry needs \"vertex\" or \"broken\"");
    }
    entries.emplace_back(std::move(x), parse_ideal(field(e, "ideal", "phi entry")));
  }
  const RingSpec ring = entries.empty() ? RingSpec::integers() : entries.front().second.ring();
  for (const auto& [x, ideal] : entries)
    if (!(ideal.ring() == ring)) throw MalformedInput("phi mixes ideals of different rings");
  return make_graded_ideal_fn(lattice, ring, entries);
}

json to_json(const PairLattice& lattice, const GradedIdealFn& phi) {
  const auto& g = lattice.graph();
  json out = json::array();
  const auto& domain = lattice.extended_vertices();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const auto& x = domain[i];
    json e;
    if (x.is_broken()) {
      e["broken"] = {{"v", g.vertex_name(x.vertex)}, {"H", to_json(g, *x.broken_by)}};
    } else {
      e["vertex"] = g.vertex_name(x.vertex);
    }
    e["ideal"] = to_json(phi[i]);
    out.push_back(std::move(e));
  }
  return out;
}

json hs_lattice_to_json(const PairLattice& lattice) {
  const auto& g = lattice.graph();
  json elements = json::array();
  const auto& hs = lattice.hereditary_saturated_sets();
  for (std::size_t i = 0; i < hs.size(); ++i)
    elements.push_back({{"index", i},
                        {"H", to_json(g, hs[i])},
                        {"breaking", to_json(g, lattice.breaking_of(i))}});
  json covers = json::array();
  for (auto [a, b] : hs_covers(lattice)) covers.push_back({a, b});
  return {{"elements", elements}, {"covers", covers}};
}

std::string hs_lattice_to_dot(const PairLattice& lattice) {
  const auto& g = lattice.graph();
  const auto& hs = lattice.hereditary_saturated_sets();
  std::ostringstream out;
  out << "digraph H_E {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < hs.size(); ++i)
    out << "  n" << i << " [label=" << quoted(braced(g, hs[i])) << "];\n";
  for (auto [a, b] : hs_covers(lattice)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

json pairs_to_json(const PairLattice& lattice) {
  json covers = json::array();
  for (auto [a, b] : nonzero_covers(lattice)) covers.push_back({a, b});
  return {{"elements", pair_list(lattice, lattice.nonzero())}, {"covers", covers}};
}

std::string pairs_to_dot(const PairLattice& lattice) {
  std::ostringstream out;
  out << "digraph T_E {\n  rankdir=BT;\n";
  for (auto i : lattice.nonzero())
    out << "  n" << i << " [label=" << quoted(to_string(lattice.graph(), lattice[i])) << "];\n";
  for (auto [a, b] : nonzero_covers(lattice)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

json to_json(const Graph& g, const Cycle& c) {
  json vs = json::array(), es = json::array();
  for (auto v : c.vertices) vs.push_back(g.vertex_name(v));
  for (auto e : c.edges) es.push_back(g.edge(e).id);
  return {{"base", g.vertex_name(c.base())}, {"vertices", vs}, {"edges", es}};
}

json to_json(const ValidationReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations)
    vs.push_back({{"clause", v.clause}, {"witness", v.witness}, {"detail", v.detail}});
  return {{"valid", r.ok()}, {"violations", vs}};
}

json to_json(const IdealClass& c, const SymbolTable& symbols) {
  json image = json::array();
  for (const auto& i : c.image) image.push_back(to_json(i));
  json out = {{"class", to_string(c, symbols)}, {"image", image}};
  if (c.ideal) out["ideal"] = to_json(*c.ideal);
  return out;
}

json to_json(const QuotientGraph& q) {
  return {{"graph", to_json(q.graph)},
          {"vertex_origin", q.vertex_origin},
          {"edge_origin", q.edge_origin}};
}

json to_json(const PorcupineGraph& p) {
  return {{"graph", to_json(p.graph)},
          {"infinite", p.infinite},
          {"depth", p.depth},
          {"vertex_origin", p.vertex_origin},
          {"edge_origin", p.edge_origin}};
}

json to_json(const AlgebraDescriptor& d, const SymbolTable& symbols) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    json term = {{"text", to_string(t, symbols)}, {"size", t.size}, {"ring", to_json(t.ring)}};
    switch (t.kind) {
      case AlgebraTerm::Kind::Matrix: term["kind"] = "Matrix"; break;
      case AlgebraTerm::Kind::MatrixLaurent: term["kind"] = "MatrixLaurent"; break;
      case AlgebraTerm::Kind::NamedLPA:
        term["kind"] = "NamedLPA";
        term["graph"] = t.graph_name;
        term["infinite"] = t.infinite_graph;
        break;
    }
    terms.push_back(std::move(term));
  }
  return {{"text", to_string(d, symbols)}, {"terms", terms}};
}

json to_json(const Graph& g, const IBasicResult& r, const SymbolTable& symbols) {
  return {{"classification", to_json(r.classification, symbols)},
          {"pair", to_json(g, r.pair)},
          {"ideal", to_json(r.ideal)},
          {"quotient_ring", to_json(r.quotient_ring)},
          {"quotient_graph", to_json(r.graph)},
          {"algebra", to_json(r.algebra, symbols)},
          {"claim", std::string(to_string(r.licence))},
          {"text", pretty_quotient(g, r.ideal.ring(), r.algebra, symbols)}};
}

json to_json(const Graph& g, const Decomposition& d, const SymbolTable& symbols) {
  json summands = json::array();
  for (const auto& s : d.summands)
    summands.push_back({{"ideal", to_json(s.ideal)},
                        {"ring", to_json(s.ring)},
                        {"X", to_json(g, s.x)},
                        {"porcupine", to_json(s.graph)},
                        {"algebra", to_json(s.algebra, symbols)},
                        {"vanishing", s.vanishing}});
  const auto ring = d.summands.empty() ? RingSpec::integers() : d.summands.front().ideal.ring();
  return {{"summands", summands},
          {"algebra", to_json(d.algebra(), symbols)},
          {"claim", std::string(to_string(d.licence))},
          {"text", pretty_quotient(g, ring, d.algebra(), symbols)}};
}

json to_json(const ConsistencyVerdict& v) {
  json out = {{"consistent", v.consistent},
              {"reason", v.reason},
              {"quotient_graph", to_json(v.quotient)}};
  if (v.porcupine) out["porcupine_graph"] = to_json(*v.porcupine);
  if (v.isomorphism && v.porcupine) {
    json iso = json::object();
    for (VertexId a = 0; a < v.isomorphism->size(); ++a)
      iso[v.porcupine->vertex_name(a)] = v.quotient.vertex_name((*v.isomorphism)[a]);
    out["isomorphism"] = iso;
  }
  return out;
}

}  // namespace lpa::io

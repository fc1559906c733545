#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "lpa/generate.hpp"
#include "lpa/io.hpp"

using namespace lpa;
using lpa::io::json;

namespace {

enum class Format { Text, Json, Dot };

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_path;
  std::string format = "text";
  std::optional<std::size_t> depth;
  std::string f_path, phi_path;
  std::optional<std::string> h, s, x_set;
  std::int64_t k = 1;
  std::string x;
  std::vector<std::string> symbols;
  std::uint64_t seed = 1;
  std::size_t vertices = 6;
  bool infinite = false;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "dot") return Format::Dot;
    return Format::Text;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

VertexSet names_to_set(const Graph& g, const std::optional<std::string>& list) {
  json names = json::array();
  if (list)
    for (const auto& n : split(*list, ',')) names.push_back(n);
  return io::parse_vertex_set(g, names);
}

SymbolTable symbol_table(const Options& o) {
  SymbolTable t;
  for (const auto& s : o.symbols) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw io::MalformedInput("--symbol expects name=value, got '" + s + "'");
    try {
      t.add(s.substr(0, eq), std::stoull(s.substr(eq + 1)));
    } catch (const std::logic_error&) {
      throw io::MalformedInput("--symbol value must be a positive integer: '" + s + "'");
    }
  }
  return t;
}

std::size_t depth_of(const Options& o, const Graph& g) {
  if (o.depth) return *o.depth;
  if (const char* env = std::getenv("LPA_DEPTH")) {
    try {
      return std::stoul(env);
    } catch (const std::logic_error&) {
      throw io::MalformedInput(std::string("LPA_DEPTH must be a non-negative integer, got '") +
                               env + "'");
    }
  }
  return default_depth(g);
}

ExtendedVertex parse_extended(const Graph& g, const std::string& text) {
  const auto caret = text.find('^');
  ExtendedVertex out;
  const auto name = text.substr(0, caret);
  auto v = g.find_vertex(name);
  if (!v) throw io::MalformedInput("unknown vertex '" + name + "'");
  out.vertex = *v;
  if (caret != std::string::npos) {
    auto rest = text.substr(caret + 1);
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
      throw io::MalformedInput("broken vertex must look like u^{v,w}");
    out.broken_by = names_to_set(g, rest.substr(1, rest.size() - 2));
  }
  return out;
}

std::string braced(const Graph& g, const VertexSet& set) {
  std::string out;
  for (const auto& n : g.names_of(set)) out += (out.empty() ? "" : ",") + n;
  return "{" + out + "}";
}

void print_graph_text(std::ostream& out, const Graph& g) {
  out << "graph " << g.name() << "\n";
  out << "vertices:";
  for (const auto& v : g.vertex_names()) out << " " << v;
  out << "\n";
  for (const auto& e : g.edges()) {
    out << "edge " << e.id << ": " << g.vertex_name(e.src) << " -> " << g.vertex_name(e.dst);
    if (e.mult.is_infinite() || e.mult.count() != 1) out << " x" << e.mult.to_string();
    out << "\n";
  }
}

void print_report(std::ostream& out, const ValidationReport& r) {
  if (r.ok()) {
    out << "valid\n";
    return;
  }
  out << "invalid\n";
  for (const auto& v : r.violations)
    out << "(" << v.clause << ") " << v.witness << ": " << v.detail << "\n";
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  const Graph& graph() {
    if (!graph_) graph_ = io::load_graph(o_.graph_path);
    return *graph_;
  }
  const PairLattice& lattice() {
    if (!lattice_) lattice_.emplace(graph());
    return *lattice_;
  }
  SaturatedFn f() {
    if (o_.f_path.empty()) throw io::MalformedInput("--f is required");
    return io::parse_saturated_fn(lattice(), io::read_json(o_.f_path));
  }
  GradedIdealFn phi() {
    if (o_.phi_path.empty()) throw io::MalformedInput("--phi is required");
    return io::parse_graded_ideal_fn(lattice(), io::read_json(o_.phi_path));
  }
  /// f from --f, or f_φ from --phi once φ has been validated.
  SaturatedFn f_any() {
    if (!o_.f_path.empty()) return require_saturated(f());
    if (o_.phi_path.empty()) throw io::MalformedInput("--f or --phi is required");
    return f_from_phi(lattice(), require_valid(phi()));
  }
  GradedIdealFn phi_any() {
    if (!o_.phi_path.empty()) return require_valid(phi());
    if (o_.f_path.empty()) throw io::MalformedInput("--f or --phi is required");
    return phi_from_f(lattice(), require_saturated(f()));
  }

  SaturatedFn require_saturated(SaturatedFn f) {
    auto r = validate_saturated(lattice(), f);
    if (!r.ok()) {
      print_report(std::cerr, r);
      throw ValidationFailure("f is not a saturated function");
    }
    return f;
  }
  GradedIdealFn require_valid(GradedIdealFn phi) {
    auto r = validate_phi(lattice(), phi);
    if (!r.ok()) {
      print_report(std::cerr, r);
      throw ValidationFailure("phi is not a graded ideal function");
    }
    return phi;
  }

  void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

 private:
  const Options& o_;
  std::optional<Graph> graph_;
  std::optional<PairLattice> lattice_;
};

int run(const std::string& command, const Options& o) {
  Runner r(o);
  const auto fmt = o.fmt();
  auto& out = std::cout;

  if (command == "generate") {
    std::mt19937_64 rng(o.seed);
    GraphGenOptions opts;
    opts.min_vertices = opts.max_vertices = std::max<std::size_t>(1, std::min<std::size_t>(o.vertices, 26));
    if (o.infinite) opts.infinite_probability = 0.15;
    const auto g = random_graph(rng, opts);
    if (fmt == Format::Dot) {
      out << io::to_dot(g);
    } else if (fmt == Format::Json) {
      r.emit(io::to_json(g));
    } else {
      print_graph_text(out, g);
    }
    return 0;
  }

  const auto& g = r.graph();
  if (command == "lattice") {
    const auto& L = r.lattice();
    if (fmt == Format::Json) {
      r.emit(io::hs_lattice_to_json(L));
    } else if (fmt == Format::Dot) {
      out << io::hs_lattice_to_dot(L);
    } else {
      const auto& hs = L.hereditary_saturated_sets();
      for (std::size_t i = 0; i < hs.size(); ++i) {
        out << braced(g, hs[i]);
        if (L.breaking_of(i).any()) out << "  B_H=" << braced(g, L.breaking_of(i));
        out << "\n";
      }
    }
    return 0;
  }
  if (command == "pairs") {
    const auto& L = r.lattice();
    if (fmt == Format::Json) {
      r.emit(io::pairs_to_json(L));
    } else if (fmt == Format::Dot) {
      out << io::pairs_to_dot(L);
    } else {
      for (auto i : L.nonzero()) out << to_string(g, L[i]) << "\n";
      for (auto [a, b] : L.covers())
        if (a != L.minimum()) out << to_string(g, L[a]) << " < " << to_string(g, L[b]) << "\n";
    }
    return 0;
  }
  if (command == "check-k") {
    const bool k = condition_K(g);
    if (fmt == Format::Json) {
      r.emit({{"condition_K", k}, {"all_ideals_graded", k}, {"condition_L", condition_L(g)}});
    } else {
      out << "Condition (K): " << (k ? "true" : "false")
          << "; all ideals graded: " << (k ? "true" : "false") << "\n";
    }
    return 0;
  }
  if (command == "cu") {
    const auto cycles = cu_cycles(g);
    if (fmt == Format::Json) {
      json list = json::array();
      for (const auto& c : cycles) {
        auto j = io::to_json(g, c);
        j["downset"] = io::to_json(g, cycle_downset(g, c));
        list.push_back(std::move(j));
      }
      r.emit(list);
    } else {
      for (const auto& c : cycles) {
        out << g.vertex_name(c.base()) << ":";
        for (auto e : c.edges) out << " " << g.edge(e).id;
        out << "\n";
      }
    }
    return 0;
  }
  if (command == "validate-f" || command == "validate-phi") {
    const auto report = command == "validate-f" ? validate_saturated(r.lattice(), r.f())
                                                : validate_phi(r.lattice(), r.phi());
    if (fmt == Format::Json) {
      r.emit(io::to_json(report));
    } else {
      print_report(out, report);
    }
    return report.ok() ? 0 : 1;
  }
  const auto symbols = symbol_table(o);
  if (command == "phi") {
    const auto& L = r.lattice();
    const auto phi = phi_from_f(L, r.require_saturated(r.f()));
    if (fmt == Format::Json) {
      r.emit(io::to_json(L, phi));
    } else {
      for (std::size_t i = 0; i < phi.values.size(); ++i)
        out << to_string(g, L.extended_vertices()[i]) << " -> " << to_string(phi[i], symbols) << "\n";
    }
    return 0;
  }
  if (command == "f") {
    const auto& L = r.lattice();
    const auto f = f_from_phi(L, r.require_valid(r.phi()));
    if (fmt == Format::Json) {
      r.emit(io::to_json(L, f));
    } else {
      for (auto i : L.nonzero()) out << to_string(g, L[i]) << " -> " << to_string(f[i], symbols) << "\n";
    }
    return 0;
  }
  if (command == "classify") {
    const auto c = classify(r.lattice(), r.f_any());
    if (fmt == Format::Json) {
      r.emit(io::to_json(c, symbols));
    } else {
      out << to_string(c, symbols) << "\n";
    }
    return 0;
  }
  if (command == "member") {
    if (o.x.empty()) throw io::MalformedInput("--x is required");
    const auto x = parse_extended(g, o.x);
    const bool in = membership(r.lattice(), r.phi_any(), o.k, x);
    if (fmt == Format::Json) {
      r.emit({{"k", o.k}, {"x", to_string(g, x)}, {"member", in}});
    } else {
      out << o.k << "*" << to_string(g, x) << (in ? " in A" : " not in A") << "\n";
    }
    return 0;
  }
  if (command == "max-basic") {
    const auto m = max_basic_pair(r.lattice(), r.f_any());
    if (fmt == Format::Json) {
      r.emit({{"pair", io::to_json(g, m.pair)}, {"zero_basic_part", m.zero_basic_part}});
    } else {
      out << to_string(g, m.pair) << "\n";
    }
    return 0;
  }
  if (command == "quotient-graph") {
    const auto q = quotient_graph(g, AdmissiblePair{names_to_set(g, o.h), names_to_set(g, o.s)});
    if (fmt == Format::Json) {
      r.emit(io::to_json(q));
    } else if (fmt == Format::Dot) {
      out << io::to_dot(q.graph);
    } else {
      print_graph_text(out, q.graph);
    }
    return 0;
  }
  if (command == "porcupine") {
    const auto p = porcupine(g, names_to_set(g, o.x_set), depth_of(o, g));
    if (fmt == Format::Json) {
      r.emit(io::to_json(p));
    } else if (fmt == Format::Dot) {
      out << io::to_dot(p.graph);
    } else {
      print_graph_text(out, p.graph);
      out << "infinite: " << (p.infinite ? "true" : "false") << "\n";
      out << "depth: " << p.depth << "\n";
    }
    return 0;
  }
  if (command == "quotient") {
    const auto res = epimorphism_data(r.lattice(), r.f_any());
    if (fmt == Format::Json) {
      r.emit(io::to_json(g, res, symbols));
    } else if (res.licence == Licence::EpimorphismOnly) {
      out << "class: " << to_string(res.classification, symbols) << "\n";
      out << "epimorphism only, not isomorphism: " << lpa_symbol(res.quotient_ring, symbols) << "("
          << res.graph.graph.name() << ") -> " << lpa_symbol(res.ideal.ring(), symbols) << "("
          << g.name() << ")/A\n";
      out << "use decompose for a general graded ideal on a row-finite graph\n";
    } else {
      out << pretty_quotient(g, res.ideal.ring(), res.algebra, symbols) << "\n";
    }
    if (res.licence == Licence::EpimorphismOnly) {
      std::cerr << "quotient: the graded ideal is neither basic nor I-basic; no isomorphism is "
                   "licensed\n";
      return 1;
    }
    return 0;
  }
  if (command == "decompose") {
    if (!g.row_finite())
      throw NotRowFinite("graph '" + g.name() +
                         "' is not row-finite (it has an infinite edge bundle); decompose "
                         "requires a row-finite graph");
    const auto d = decompose(r.lattice(), r.phi_any(), depth_of(o, g));
    if (fmt == Format::Json) {
      r.emit(io::to_json(g, d, symbols));
    } else {
      out << to_string(d.algebra(), symbols) << "\n";
    }
    return 0;
  }
  if (command == "cross-check") {
    const auto v = cross_check(r.lattice(), r.f_any(), depth_of(o, g));
    if (fmt == Format::Json) {
      r.emit(io::to_json(v));
    } else {
      out << (v.consistent ? "consistent" : "inconsistent") << ": " << v.reason << "\n";
    }
    return v.consistent ? 0 : 1;
  }
  throw io::MalformedInput("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices of graded ideals and quotients of Leavitt path algebras"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"lattice", "hereditary saturated subsets with their Hasse diagram"},
      {"pairs", "admissible pairs T_E* with their Hasse diagram"},
      {"check-k", "Condition (K)"},
      {"cu", "cycles based at vertices with exactly one simple closed path"},
      {"validate-f", "check that --f is a saturated function"},
      {"validate-phi", "check that --phi is a graded ideal function"},
      {"phi", "graded ideal function of --f"},
      {"f", "saturated function of --phi"},
      {"classify", "basic, I-basic or general graded"},
      {"member", "is k*x in the graded ideal"},
      {"max-basic", "maximal basic pair below the ideal"},
      {"quotient-graph", "E \\ (H,S)"},
      {"porcupine", "porcupine graph _X E"},
      {"quotient", "quotient by a basic or I-basic graded ideal"},
      {"decompose", "porcupine decomposition of the quotient (row-finite graphs)"},
      {"cross-check", "compare the two quotient descriptions"},
      {"generate", "random graph for the given --seed"},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    if (std::string(s.name) == "generate") {
      sub->add_option("--seed", o.seed, "random seed");
      sub->add_option("--vertices", o.vertices, "number of vertices (1-26)");
      sub->add_flag("--infinite", o.infinite, "allow infinite bundles");
    } else {
      sub->add_option("graph", o.graph_path, "graph JSON file")->required();
      sub->add_option("--f", o.f_path, "saturated function JSON");
      sub->add_option("--phi", o.phi_path, "graded ideal function JSON");
      sub->add_option("--H", o.h, "comma-separated H");
      sub->add_option("--S", o.s, "comma-separated S");
      sub->add_option("--X", o.x_set, "comma-separated X");
      sub->add_option("--k", o.k, "coefficient for member");
      sub->add_option("--x", o.x, "vertex u or broken vertex u^{v,w} for member");
      sub->add_option("--symbol", o.symbols, "name=value, rendered symbolically");
      sub->add_option("--depth", o.depth, "porcupine truncation depth (env LPA_DEPTH)");
    }
    sub->add_option("--format", o.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const io::MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const NotRowFinite& e) {
    std::cerr << "row-finiteness required: " << e.what() << "\n";
    return 1;
  } catch (const ValidationFailure& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (const PartialAssignment& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::length_error& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

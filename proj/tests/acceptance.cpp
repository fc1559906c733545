#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "lpa/io.hpp"
#include "lpa/quotients.hpp"
#include "property_checks.hpp"

using namespace lpa;
using namespace lpa::test;

namespace {

const std::string data_dir = LPA_DATA_DIR;

struct Run {
  std::string out;
  int code = -1;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(LPA_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return data_dir + "/" + name; }

// Vertex names plus (id, source, range, multiplicity) of every bundle.
std::set<std::string> signature(const Graph& g) {
  std::set<std::string> out;
  for (const auto& v : g.vertex_names()) out.insert("vertex " + v);
  for (const auto& e : g.edges())
    out.insert("edge " + e.id + " " + g.vertex_name(e.src) + " " + g.vertex_name(e.dst) + " " +
               e.mult.to_string());
  return out;
}

Graph line(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  return Graph(std::move(vertices), std::move(edges));
}

EdgeSpec edge(const std::string& id, const std::string& s, const std::string& r) {
  return EdgeSpec{id, s, r, Multiplicity(1)};
}

class Checker {
 public:
  explicit Checker(std::ostream& log) : log_(log) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }

  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got '" << got << "', want '" << want << "'";
      failures_.push_back(s.str());
    }
  }

  bool finish(int index, const std::string& title) {
    const bool ok = failures_.empty();
    log_ << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << title << "\n";
    for (const auto& f : failures_) log_ << "    " << f << "\n";
    failures_.clear();
    return ok;
  }

 private:
  std::ostream& log_;
  std::vector<std::string> failures_;
};

void criterion1(Checker& c) {
  const auto pairs = cli("pairs " + data("larki.json"));
  c.equal(pairs.code, 0, "pairs exit");
  c.equal(pairs.out,
          std::string("({v},∅)\n({v},{u})\n({u,v},∅)\n({v},∅) < ({v},{u})\n({v},{u}) < ({u,v},∅)\n"),
          "pairs output");
  PairLattice l(larki());
  c.equal(l.size(), std::size_t{4}, "T_E including (∅,∅)");
  for (std::size_t a : l.nonzero())
    for (std::size_t b : l.nonzero()) c.expect(l.leq(a, b) || l.leq(b, a), "T_E* is a chain");

  const auto f = " --f " + data("larki.f.json");
  const auto json_f = io::parse_saturated_fn(l, io::read_json(data("larki.f.json")));
  c.expect(json_f == make_f(l, RingSpec::integers(), {{{"v"}, {}, 1}, {{"v"}, {"u"}, 2}, {{"u", "v"}, {}, 0}}),
           "larki.f.json is (Z, 2Z, 0Z)");
  c.equal(cli("validate-f " + data("larki.json") + f).out, std::string("valid\n"), "validate-f");
  c.equal(cli("member " + data("larki.json") + f + " --k 2 --x 'u^{v}'").out,
          std::string("2*u^{v} in A\n"), "2u^H member");
  c.equal(cli("member " + data("larki.json") + f + " --k 1 --x 'u^{v}'").out,
          std::string("1*u^{v} not in A\n"), "u^H member");
  c.equal(cli("classify " + data("larki.json") + f).out, std::string("GeneralGraded\n"), "classify");
}

void criterion2(Checker& c) {
  const auto base = "quotient " + data("toeplitz.json") + " --symbol n=5 --f ";
  c.equal(cli(base + data("toeplitz.f.case1.json")).out, std::string("L_Z(T)/A ≅ Z_n[x,x^-1]\n"),
          "case a=1, b=n");
  c.equal(cli(base + data("toeplitz.f.case2.json")).out, std::string("L_Z(T)/A ≅ L_{Z_n}(T)\n"),
          "case a=b=n");
  PairLattice t(toeplitz());
  const auto Z = RingSpec::integers();
  for (std::uint64_t k : {2, 3, 7, 12, 30}) {
    SymbolTable s;
    s.add("n", k);
    const auto r1 = quotient_ibasic(t, make_f(t, Z, {{{"v"}, {}, 1}, {{"u", "v"}, {}, k}}));
    const auto r2 = quotient_ibasic(t, make_f(t, Z, {{{"v"}, {}, k}, {{"u", "v"}, {}, k}}));
    c.equal(to_string(r1.algebra, s), std::string("Z_n[x,x^-1]"), "a=1, b=" + std::to_string(k));
    c.equal(to_string(r2.algebra, s), std::string("L_{Z_n}(T)"), "a=b=" + std::to_string(k));
  }
}

void criterion3(Checker& c) {
  PairLattice l(larki());
  const auto& g = l.graph();
  const auto Z = RingSpec::integers();
  SymbolTable s;
  s.add("n", 5);
  const std::array<std::string, 3> expected{"L_{Z_n}(T)", "Z_n[x,x^-1]", "L_{Z_n}(E)"};
  const std::array<Graph, 3> pictures{
      line({"u", "u'"}, {edge("c", "u", "u"), edge("e'", "u", "u'")}),
      line({"u"}, {edge("c", "u", "u")}), g};
  const std::array<AdmissiblePair, 3> pairs{AdmissiblePair{g.make_set({"v"}), g.empty_set()},
                                            AdmissiblePair{g.make_set({"v"}), g.make_set({"u"})},
                                            AdmissiblePair{g.empty_set(), g.empty_set()}};
  for (int i = 0; i < 3; ++i) {
    const auto name = "larki.f.case" + std::to_string(i + 1) + ".json";
    const auto f = io::parse_saturated_fn(l, io::read_json(data(name)));
    const auto r = quotient_ibasic(l, f);
    const auto tag = "case (" + std::to_string(i + 1) + ")";
    c.equal(to_string(r.algebra, s), expected[i], tag + " algebra");
    c.expect(r.pair == pairs[i], tag + " pair");
    c.expect(find_isomorphism(r.graph.graph, pictures[i]).has_value(), tag + " quotient graph");
    c.equal(r.graph.graph.vertex_count(), pictures[i].vertex_count(), tag + " vertex count");
    c.equal(r.graph.graph.edge_count(), pictures[i].edge_count(), tag + " edge count");
    const auto out = cli("quotient " + data("larki.json") + " --symbol n=5 --f " + data(name));
    c.equal(out.out, "L_Z(E)/A ≅ " + expected[i] + "\n", tag + " CLI");
  }
}

void criterion4(Checker& c) {
  const auto g = io::load_graph(data("ex32.json"));
  struct Case {
    std::vector<std::string> x;
    Graph picture;
  };
  const std::vector<Case> cases{
      {{"u"}, line({"u"}, {})},
      {{"v1"}, line({"v1", "w^{e1}"}, {edge("f^{e1}", "w^{e1}", "v1")})},
      {{"u", "v1"}, line({"u", "v1"}, {edge("e1", "u", "v1")})},
      {{"v2"},
       line({"v2", "w^{e2}", "w^{e1e2}"},
            {edge("f^{e2}", "w^{e2}", "v2"), edge("f^{e1e2}", "w^{e1e2}", "w^{e2}")})},
      {{"v3"},
       line({"v3", "w^{e3}", "w^{e1e3}"},
            {edge("f^{e3}", "w^{e3}", "v3"), edge("f^{e1e3}", "w^{e1e3}", "w^{e3}")})},
      {{"v2", "v3"},
       line({"v2", "v3", "w^{e2}", "w^{e3}", "w^{e1e2}", "w^{e1e3}"},
            {edge("f^{e2}", "w^{e2}", "v2"), edge("f^{e1e2}", "w^{e1e2}", "w^{e2}"),
             edge("f^{e3}", "w^{e3}", "v3"), edge("f^{e1e3}", "w^{e1e3}", "w^{e3}")})},
      {{"u", "v1", "v2"}, line({"u", "v1", "v2"}, {edge("e1", "u", "v1"), edge("e2", "v1", "v2")})},
      {{"u", "v1", "v3"}, line({"u", "v1", "v3"}, {edge("e1", "u", "v1"), edge("e3", "v1", "v3")})}};
  for (const auto& k : cases) {
    std::string tag = "X = {";
    for (auto v : k.x) tag += std::string(v) + " ";
    tag += "}";
    const auto p = porcupine(g, g.make_set(k.x), default_depth(g));
    c.expect(!p.infinite, tag + " finite");
    c.expect(signature(p.graph) == signature(k.picture), tag + " graph");
  }
}

void criterion5(Checker& c) {
  const auto r = cli("decompose " + data("ex418.json") + " --phi " + data("ex418.phi.json") +
                     " --symbol p=2 --symbol q=3");
  c.equal(r.code, 0, "decompose exit");
  c.equal(r.out, std::string("M_3(Z_p) (+) M_3(Z_q) (+) M_2(Z_pq)\n"), "p=2, q=3");
  c.equal(cli("decompose " + data("ex418.json") + " --phi " + data("ex418.phi.json")).out,
          std::string("M_3(Z_2) (+) M_3(Z_3) (+) M_2(Z_6)\n"), "numeric");

  PairLattice b(io::load_graph(data("ex418.json")));
  for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{5, 7}, {11, 13}, {3, 2}}) {
    const auto phi = vertex_phi(b, RingSpec::integers(), {{"u", p * q}, {"v1", p * q}, {"v2", p}, {"v3", q}});
    const auto path = std::filesystem::temp_directory_path() /
                      ("lpa_acceptance_phi_" + std::to_string(p) + ".json");
    std::ofstream(path) << io::to_json(b, phi).dump();
    const auto out = cli("decompose " + data("ex418.json") + " --phi " + path.string() + " --symbol p=" +
                         std::to_string(p) + " --symbol q=" + std::to_string(q));
    const std::string want = p < q ? "M_3(Z_p) (+) M_3(Z_q) (+) M_2(Z_pq)\n"
                                   : "M_3(Z_q) (+) M_3(Z_p) (+) M_2(Z_pq)\n";
    c.equal(out.out, want, "p=" + std::to_string(p) + ", q=" + std::to_string(q));
    std::filesystem::remove(path);
  }
}

void criterion6(Checker& c) {
  const auto suite = run_property_suite(20240601, 220);
  c.expect(suite.instances >= 200, "at least 200 instances");
  std::size_t checks = 0;
  for (const auto& r : suite.results) {
    checks += r.checks;
    c.expect(r.checks > 0, r.name + ": no checks ran");
    for (const auto& f : r.failures) c.expect(false, r.name + ": " + f);
  }
  std::cout << "    " << suite.instances << " instances (" << suite.row_finite_instances
            << " row-finite), " << checks << " checks\n";
}

void criterion7(Checker& c) {
  const auto t = io::load_graph(data("toeplitz.json"));
  const auto x = t.make_set({"v"});
  for (std::size_t d = 0; d <= 10; ++d) {
    const auto p = porcupine(t, x, d);
    c.expect(p.infinite, "infinite at depth " + std::to_string(d));
    c.equal(p.depth, d, "reported depth");
    std::size_t spine = 0;
    for (const auto& v : p.graph.vertex_names()) spine += v.rfind("w^{", 0) == 0;
    c.equal(spine, d, "spine vertices at depth " + std::to_string(d));
    c.equal(p.graph.vertex_count(), d + 1, "vertex count at depth " + std::to_string(d));
  }
  const auto out = cli("porcupine " + data("toeplitz.json") + " --X v --depth 4");
  c.expect(out.out.find("infinite: true\ndepth: 4\n") != std::string::npos, "CLI infinite marker");
}

void criterion8(Checker& c) {
  const auto r = cli("decompose " + data("larki.json") + " --phi " + data("ex418.phi.json"));
  c.equal(r.code, 1, "decompose exit");
  c.expect(r.out.find("row-finite") != std::string::npos, "row-finiteness diagnostic");
  std::ifstream readme(LPA_SOURCE_DIR "/README.md");
  std::stringstream text;
  text << readme.rdbuf();
  c.expect(text.str().find("infinite clock") != std::string::npos, "README documents the infinite clock");
  std::cout << "    note: the infinite clock C_N has infinitely many vertices and no input encoding\n";
}

}  // namespace

int main() {
  Checker c(std::cout);
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"larki pairs chain, validate-f, member, classify", criterion1},
      {"Toeplitz quotients Z_n[x,x^-1] and L_{Z_n}(T)", criterion2},
      {"broken-vertex quotients and their quotient graphs", criterion3},
      {"six porcupine cases on the branching graph", criterion4},
      {"decompose prints M_3(Z_p) (+) M_3(Z_q) (+) M_2(Z_pq)", criterion5},
      {"seeded property suite, zero failures", criterion6},
      {"infinite porcupine truncation", criterion7},
      {"decompose refuses non-row-finite input", criterion8}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    failed += !c.finish(static_cast<int>(i + 1), criteria[i].first);
  }
  return failed == 0 ? 0 : 1;
}

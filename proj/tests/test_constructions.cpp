#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "lpa/constructions.hpp"

using namespace lpa;
using namespace lpa::test;

namespace {

std::set<std::string> names(const Graph& g) {
  return {g.vertex_names().begin(), g.vertex_names().end()};
}

std::set<std::string> edge_ids(const Graph& g) {
  std::set<std::string> out;
  for (const auto& e : g.edges()) out.insert(e.id);
  return out;
}

std::pair<std::string, std::string> ends(const Graph& g, const std::string& id) {
  const auto& e = g.edge(*g.find_edge(id));
  return {g.vertex_name(e.src), g.vertex_name(e.dst)};
}

// Labels of F(X) up to length depth, by walking every edge copy.
std::set<std::string> brute_f_of_x(const Graph& g, const VertexSet& x, std::size_t depth) {
  std::set<std::string> out;
  auto walk = [&](auto&& self, VertexId at, const std::string& label, std::size_t len) -> void {
    if (len == depth) return;
    for (EdgeId id : g.out_edges(at)) {
      const auto& e = g.edge(id);
      const std::uint64_t m = e.mult.count();
      for (std::uint64_t k = 1; k <= m; ++k) {
        const auto step = label + (m == 1 ? e.id : e.id + "#" + std::to_string(k));
        if (x.test(e.dst)) {
          out.insert(step);
        } else {
          self(self, e.dst, step, len + 1);
        }
      }
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!x.test(v)) walk(walk, v, "", 0);
  return out;
}

std::set<std::string> labels(const Graph& g, const EntryPaths& p) {
  std::set<std::string> out;
  for (const auto& path : p.paths) out.insert(path_label(g, path));
  return out;
}

// Isomorphism by trying every vertex bijection.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<VertexId> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      auto m = b.bundle_between(perm[e.src], perm[e.dst]);
      if (!m || !(b.edge(*m).mult == e.mult)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(QuotientGraph, BrokenVertexGetsPrimedCopy) {
  const auto l = larki();
  const auto q = quotient_graph(l, AdmissiblePair{l.make_set({"v"}), l.empty_set()});
  EXPECT_EQ(names(q.graph), (std::set<std::string>{"u", "u'"}));
  EXPECT_EQ(edge_ids(q.graph), (std::set<std::string>{"c", "c'"}));
  EXPECT_EQ(ends(q.graph, "c"), std::make_pair(std::string("u"), std::string("u")));
  EXPECT_EQ(ends(q.graph, "c'"), std::make_pair(std::string("u"), std::string("u'")));
  EXPECT_EQ(q.vertex_origin.at("u'"), "u");
  EXPECT_EQ(q.edge_origin.at("c'"), "c");
  // The printed picture shows a loop at u and one edge u -> u'.
  const Graph picture({"u", "u'"}, {{"c", "u", "u", Multiplicity(1)}, {"e'", "u", "u'", Multiplicity(1)}});
  EXPECT_TRUE(find_isomorphism(q.graph, picture));
}

TEST(QuotientGraph, Examples) {
  const auto l = larki();
  const auto q = quotient_graph(l, AdmissiblePair{l.make_set({"v"}), l.make_set({"u"})});
  EXPECT_EQ(names(q.graph), (std::set<std::string>{"u"}));
  EXPECT_EQ(edge_ids(q.graph), (std::set<std::string>{"c"}));

  const auto t = toeplitz();
  EXPECT_EQ(quotient_graph(t, AdmissiblePair{t.empty_set(), t.empty_set()}).graph, t);
  EXPECT_EQ(quotient_graph(t, AdmissiblePair{t.full_set(), t.empty_set()}).graph.vertex_count(), 0u);
  const auto tv = quotient_graph(t, AdmissiblePair{t.make_set({"v"}), t.empty_set()}).graph;
  EXPECT_EQ(tv, single_loop());
  EXPECT_THROW(quotient_graph(t, AdmissiblePair{t.make_set({"u"}), t.empty_set()}),
               std::invalid_argument);
}

TEST(QuotientGraph, NoVertexOfHSurvives) {
  for (const auto& g : random_graphs(41, 40, 6, 0.15)) {
    PairLattice l(g);
    for (const auto& p : l.elements()) {
      const auto q = quotient_graph(g, p);
      for (VertexId v : members(p.h)) EXPECT_FALSE(q.graph.find_vertex(g.vertex_name(v)));
      for (const auto& e : q.graph.edges()) {
        const auto& origin = g.edge(*g.find_edge(q.edge_origin.at(e.id)));
        EXPECT_EQ(q.vertex_origin.at(q.graph.vertex_name(e.src)), g.vertex_name(origin.src));
        EXPECT_EQ(q.vertex_origin.at(q.graph.vertex_name(e.dst)), g.vertex_name(origin.dst));
      }
    }
  }
}

TEST(EntryPaths, Examples) {
  const auto g = branching();
  const auto p = f_of_x(g, g.make_set({"v2"}), 10);
  EXPECT_FALSE(p.infinite);
  EXPECT_EQ(labels(g, p), (std::set<std::string>{"e2", "e1e2"}));
  EXPECT_TRUE(f_of_x(g, g.full_set(), 10).paths.empty());

  const auto t = toeplitz();
  const auto inf = f_of_x(t, t.make_set({"v"}), 4);
  EXPECT_TRUE(inf.infinite);
  EXPECT_EQ(labels(t, inf), (std::set<std::string>{"e", "ce", "cce", "ccce"}));
}

TEST(EntryPaths, InfiniteBundleOnAPathIsRejected) {
  const auto l = larki();
  EXPECT_THROW(f_of_x(l, l.make_set({"v"}), 4), NotRowFinite);
  EXPECT_NO_THROW(f_of_x(l, l.full_set(), 4));
}

TEST(EntryPaths, MatchesBruteForce) {
  for (const auto& g : random_graphs(42, 60, 5)) {
    const std::size_t n = g.vertex_count();
    for (const auto& x : all_subsets(g)) {
      const auto depth = 2 * n;
      const auto p = f_of_x(g, x, depth);
      EXPECT_EQ(labels(g, p), brute_f_of_x(g, x, depth));
      // Paths longer than n exist exactly when F(X) is infinite.
      const auto longer = brute_f_of_x(g, x, n + 1).size() > brute_f_of_x(g, x, n).size();
      EXPECT_EQ(p.infinite, longer);
    }
  }
}

TEST(Porcupine, BranchingCases) {
  const auto g = branching();
  auto por = [&](std::initializer_list<std::string_view> x) {
    return porcupine(g, g.make_set(x), 10);
  };
  {
    const auto p = por({"u"});
    EXPECT_EQ(names(p.graph), (std::set<std::string>{"u"}));
    EXPECT_EQ(p.graph.edge_count(), 0u);
  }
  {
    const auto p = por({"v1"});
    EXPECT_EQ(names(p.graph), (std::set<std::string>{"v1", "w^{e1}"}));
    EXPECT_EQ(ends(p.graph, "f^{e1}"), std::make_pair(std::string("w^{e1}"), std::string("v1")));
  }
  {
    const auto p = por({"u", "v1"});
    EXPECT_EQ(names(p.graph), (std::set<std::string>{"u", "v1"}));
    EXPECT_EQ(edge_ids(p.graph), (std::set<std::string>{"e1"}));
  }
  for (std::string i : {"2", "3"}) {
    const auto p = por({"v" + i});
    EXPECT_EQ(names(p.graph), (std::set<std::string>{"v" + i, "w^{e" + i + "}", "w^{e1e" + i + "}"}));
    EXPECT_EQ(ends(p.graph, "f^{e" + i + "}"), std::make_pair("w^{e" + i + "}", "v" + i));
    EXPECT_EQ(ends(p.graph, "f^{e1e" + i + "}"), std::make_pair("w^{e1e" + i + "}", "w^{e" + i + "}"));
    EXPECT_EQ(p.vertex_origin.at("w^{e1e" + i + "}"), "e1e" + i);
  }
  {
    const auto p = por({"v2", "v3"});
    EXPECT_EQ(names(p.graph), (std::set<std::string>{"v2", "v3", "w^{e2}", "w^{e3}", "w^{e1e2}",
                                                      "w^{e1e3}"}));
    EXPECT_EQ(edge_ids(p.graph),
              (std::set<std::string>{"f^{e2}", "f^{e3}", "f^{e1e2}", "f^{e1e3}"}));
    const Graph line({"a", "b", "c"}, {{"x", "a", "b", Multiplicity(1)}, {"y", "b", "c", Multiplicity(1)}});
    const Graph two_lines({"a", "b", "c", "d", "e", "f"},
                          {{"x", "a", "b", Multiplicity(1)}, {"y", "b", "c", Multiplicity(1)},
                           {"z", "d", "e", Multiplicity(1)}, {"t", "e", "f", Multiplicity(1)}});
    EXPECT_TRUE(find_isomorphism(p.graph, two_lines));
    EXPECT_TRUE(find_isomorphism(por({"v2"}).graph, line));
  }
  for (std::string i : {"2", "3"}) {
    const auto p = por({"u", "v1", "v" + i});
    EXPECT_EQ(names(p.graph), (std::set<std::string>{"u", "v1", "v" + i}));
    EXPECT_EQ(edge_ids(p.graph), (std::set<std::string>{"e1", "e" + i}));
  }
}

TEST(Porcupine, InfiniteIsTruncated) {
  const auto t = toeplitz();
  const auto p = porcupine(t, t.make_set({"v"}), 4);
  EXPECT_TRUE(p.infinite);
  EXPECT_EQ(p.depth, 4u);
  EXPECT_EQ(p.graph.vertex_count(), 5u);
  EXPECT_TRUE(p.graph.find_vertex("w^{ccce}"));
  EXPECT_EQ(ends(p.graph, "f^{ce}"), std::make_pair(std::string("w^{ce}"), std::string("w^{e}")));
  EXPECT_EQ(default_depth(t), 6u);
}

TEST(Porcupine, MultiEdgeCopiesAreSeparateVertices) {
  const Graph g({"a", "b"}, {{"e", "a", "b", Multiplicity(2)}});
  const auto p = porcupine(g, g.make_set({"b"}), 5);
  EXPECT_EQ(names(p.graph), (std::set<std::string>{"b", "w^{e#1}", "w^{e#2}"}));
}

TEST(Porcupine, WholeVertexSetGivesTheGraph) {
  for (const auto& g : random_graphs(43, 40, 7, 0.1)) EXPECT_EQ(porcupine(g, g.full_set(), 5).graph, g);
}

TEST(Porcupine, SpineDegrees) {
  // w^β has one outgoing edge and one incoming edge per eβ in F(X).
  for (const auto& g : random_graphs(44, 40, 5)) {
    for (const auto& x : all_subsets(g)) {
      const auto paths = f_of_x(g, x, default_depth(g));
      if (paths.infinite) continue;
      std::map<std::string, std::size_t> expected_in;
      for (const auto& a : paths.paths) {
        expected_in.try_emplace("w^{" + path_label(g, a) + "}", 0);
        if (a.size() > 1) ++expected_in["w^{" + path_label(g, Path(a.begin() + 1, a.end())) + "}"];
      }
      const auto& pg = porcupine(g, x, default_depth(g)).graph;
      for (const auto& [w, in] : expected_in) {
        const VertexId v = pg.vertex(w);
        ASSERT_EQ(pg.out_edges(v).size(), 1u);
        EXPECT_EQ(pg.edge(pg.out_edges(v)[0]).mult, Multiplicity(1));
        std::size_t got = 0;
        for (EdgeId e : pg.in_edges(v)) got += pg.edge(e).mult.count();
        EXPECT_EQ(got, in);
      }
    }
  }
}

TEST(Porcupine, SpineVertexCanHaveSeveralIncomingEdges) {
  const Graph g({"a", "b", "c", "x"}, {{"p", "a", "c", Multiplicity(1)},
                                       {"q", "b", "c", Multiplicity(1)},
                                       {"r", "c", "x", Multiplicity(1)}});
  const auto& pg = porcupine(g, g.make_set({"x"}), 10).graph;
  EXPECT_EQ(pg.in_edges(pg.vertex("w^{r}")).size(), 2u);
}

TEST(Porcupine, ComplementOfHereditarySaturatedMatchesQuotient) {
  for (const auto& g : random_graphs(45, 60, 6)) {
    for (const auto& h : enumerate_hereditary_saturated(g)) {
      VertexSet x = g.full_set();
      x -= h;
      const auto p = porcupine(g, x, default_depth(g));
      const auto q = quotient_graph(g, AdmissiblePair{h, g.empty_set()});
      EXPECT_FALSE(p.infinite);
      EXPECT_TRUE(find_isomorphism(p.graph, q.graph));
    }
  }
}

TEST(Recognize, Examples) {
  const auto zp = RingSpec::modular(2);
  const Graph line3({"a", "b", "c"}, {{"x", "a", "b", Multiplicity(1)}, {"y", "b", "c", Multiplicity(1)}});
  EXPECT_EQ(to_string(recognize(line3, zp)), "M_3(Z_2)");
  EXPECT_EQ(to_string(recognize(single_loop(), RingSpec::modular(5))), "Z_5[x,x^-1]");
  const Graph line2({"a", "b"}, {{"x", "a", "b", Multiplicity(1)}});
  EXPECT_EQ(to_string(recognize(line2, RingSpec::modular(6))), "M_2(Z_6)");
  EXPECT_EQ(to_string(recognize(toeplitz(), RingSpec::modular(5))), "L_{Z_5}(T)");
  EXPECT_EQ(to_string(recognize(toeplitz().renamed("other"), RingSpec::integers())), "L_Z(T)");
  EXPECT_EQ(to_string(recognize(isolated(2), RingSpec::integers())), "Z (+) Z");
  EXPECT_EQ(to_string(recognize(line3, RingSpec::zero())), "0");
  EXPECT_THROW(recognize(larki(), RingSpec::integers()), NotRowFinite);
}

TEST(Recognize, ConservativeFallbacks) {
  const auto b = recognize(branching(), RingSpec::integers());
  ASSERT_EQ(b.terms.size(), 1u);
  EXPECT_EQ(b.terms[0].kind, AlgebraTerm::Kind::NamedLPA);
  const Graph two_loops({"u"}, {{"c", "u", "u", Multiplicity(2)}});
  EXPECT_EQ(recognize(two_loops, RingSpec::integers()).terms[0].kind, AlgebraTerm::Kind::NamedLPA);
  const Graph cycle2({"a", "b"}, {{"x", "a", "b", Multiplicity(1)}, {"y", "b", "a", Multiplicity(1)}});
  EXPECT_EQ(to_string(recognize(cycle2, RingSpec::integers())), "M_2(Z[x,x^-1])");
  // Two paths into the sink give M_3.
  const Graph diamond({"a", "b"}, {{"x", "a", "b", Multiplicity(2)}});
  EXPECT_EQ(to_string(recognize(diamond, RingSpec::integers())), "M_3(Z)");
}

TEST(Isomorphism, MatchesBruteForce) {
  const auto gs = random_graphs(46, 60, 4);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i; j < std::min(gs.size(), i + 6); ++j) {
      const auto iso = find_isomorphism(gs[i], gs[j]);
      EXPECT_EQ(iso.has_value(), brute_isomorphic(gs[i], gs[j]));
      if (iso) {
        for (const auto& e : gs[i].edges()) {
          auto m = gs[j].bundle_between((*iso)[e.src], (*iso)[e.dst]);
          ASSERT_TRUE(m);
          EXPECT_EQ(gs[j].edge(*m).mult, e.mult);
        }
      }
    }
}

TEST(Isomorphism, RelabelledGraphs) {
  const Graph a({"p", "q"}, {{"x", "p", "p", Multiplicity(1)}, {"y", "p", "q", Multiplicity(1)}});
  EXPECT_TRUE(find_isomorphism(a, toeplitz()));
  EXPECT_FALSE(find_isomorphism(toeplitz(), larki()));
  EXPECT_FALSE(find_isomorphism(branching(), isolated(4)));
}

TEST(EntryPaths, BudgetShortensInfiniteEnumeration) {
  const Graph rose({"u", "v"}, {{"c", "u", "u", Multiplicity(3)}, {"e", "u", "v", Multiplicity(1)}});
  const auto x = rose.make_set({"v"});
  const auto p = f_of_x(rose, x, 20, 50);
  EXPECT_TRUE(p.infinite);
  // 1 + 3 + 9 + 27 = 40 paths fit, the 81 of length 5 would not.
  EXPECT_EQ(p.depth, 4u);
  EXPECT_EQ(p.paths.size(), 40u);
  EXPECT_EQ(porcupine(rose, x, 20, 50).depth, 4u);
  EXPECT_TRUE(f_of_x(rose, x, 0).paths.empty());
}

TEST(EntryPaths, BudgetRejectsLargeFiniteSets) {
  const Graph g({"a", "b"}, {{"e", "a", "b", Multiplicity(100)}});
  EXPECT_THROW(f_of_x(g, g.make_set({"b"}), 5, 10), std::length_error);
  EXPECT_EQ(f_of_x(g, g.make_set({"b"}), 5, 100).paths.size(), 100u);
}

#include <algorithm>
#include <set>

#include "doctest.h"

#include "corpus.hpp"
#include "cubeforest/complex.hpp"
#include "cubeforest/constructions.hpp"
#include "cubeforest/error.hpp"
#include "cubeforest/pipeline.hpp"
#include "oracles.hpp"

using namespace cubeforest;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

bool subgraph(const Graph& a, const Graph& b) {
  auto sb = edge_set(b);
  return std::all_of(a.edges().begin(), a.edges().end(), [&](const auto& e) { return sb.count(e) > 0; });
}

// hyperplane whose edges include (u,v)
int class_of(const Complex& x, int u, int v) { return x.edge_class(x.graph().edge_index(u, v)); }

}  // namespace

TEST_CASE("crossing and contact on small complexes") {
  Complex sq(grid(1, 1));
  CHECK(crosses(sq.hyperplane(0), sq.hyperplane(1)));
  auto g = contact_graph(sq);
  CHECK(g.graph.num_edges() == 1);
  CHECK(g.kind(0, 1) == ContactKind::Cross);

  Complex p(path(4));
  auto gp = contact_graph(p);
  CHECK(gp.graph.num_edges() == 3);
  for (auto k : gp.kinds) CHECK(k == ContactKind::Osculate);
  CHECK_FALSE(crosses(p.hyperplane(0), p.hyperplane(1)));

  Complex g22(grid(2, 2));
  // vertex (i,j) = 3i+j; horizontal edges change j
  int h0 = class_of(g22, 0, 1), h1 = class_of(g22, 1, 2), v0 = class_of(g22, 0, 3), v1 = class_of(g22, 3, 6);
  CHECK(crosses(g22.hyperplane(h0), g22.hyperplane(v0)));
  CHECK(crosses(g22.hyperplane(h1), g22.hyperplane(v1)));
  CHECK_FALSE(crosses(g22.hyperplane(h0), g22.hyperplane(h1)));
  CHECK(osculates(g22.hyperplane(h0), g22.hyperplane(h1)));
}

TEST_CASE("grid contact graph is K_{m,n} plus two paths") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      Complex x(grid(m, n));
      auto c = contact_graph(x);
      int cross = 0, osc = 0;
      for (auto k : c.kinds) (k == ContactKind::Cross ? cross : osc)++;
      CHECK(cross == m * n);
      CHECK(osc == (m - 1) + (n - 1));
      CHECK(oracle::chromatic_number(c.crossing_part()) == 2);
    }
}

TEST_CASE("contact and crossing graphs agree with carrier and quarter oracles") {
  for (const auto& inst : corpus::two_dimensional()) {
    if (inst.g.num_vertices() > 90) continue;
    CAPTURE(inst.name);
    Complex x(inst.g);
    auto ws = oracle::walls(x);
    auto c = contact_graph(x);
    CHECK(edge_set(c.graph) == edge_set(oracle::contact_graph(ws)));
    CHECK(edge_set(crossing_graph(x)) == edge_set(oracle::crossing_graph(ws)));
  }
}

TEST_CASE("clique number equals maximum degree") {
  for (const auto& inst : corpus::two_dimensional()) {
    CAPTURE(inst.name);
    Complex x(inst.g);
    auto c = contact_graph(x, false);
    CHECK(max_clique(c.graph) == inst.g.max_degree());
    if (c.graph.num_vertices() <= 18) CHECK(oracle::clique_number(c.graph) == inst.g.max_degree());
  }
}

TEST_CASE("pointed contact graph") {
  Complex sq(grid(1, 1));
  CHECK(pointed_contact_graph(sq, 0).graph.num_edges() == 1);

  Complex p2(path(2));
  CHECK(pointed_contact_graph(p2, 0).graph.num_edges() == 0);
  CHECK(pointed_contact_graph(p2, 1).graph.num_edges() == 1);

  Complex star(MedianGraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  auto ps = pointed_contact_graph(star, 0);
  CHECK(ps.graph.num_edges() == 3);
  for (auto k : ps.kinds) CHECK(k == ContactKind::Osculate);
  CHECK(pointed_contact_graph(star, 1).graph.num_edges() == 1);

  SUBCASE("sandwiched between crossing and contact graphs") {
    for (const auto& inst : corpus::two_dimensional()) {
      if (inst.g.num_vertices() > 90) continue;
      CAPTURE(inst.name);
      Complex x(inst.g);
      auto full = contact_graph(x, false);
      auto cr = full.crossing_part();
      for (int v = 0; v < inst.g.num_vertices(); ++v) {
        auto pv = pointed_contact_graph(x, v);
        CHECK(subgraph(cr, pv.graph));
        CHECK(subgraph(pv.graph, full.graph));
      }
    }
  }
}

TEST_CASE("dimension") {
  CHECK(dimension(Complex(path(3))) == 1);
  CHECK(dimension(Complex(grid(2, 3))) == 2);
  CHECK(dimension(Complex(simplex_graph(corpus::complete_graph(3)))) == 3);
  auto st = complex_stats(Complex(MedianGraph(grid(2, 2).num_vertices(), grid(2, 2).edges(), 4)));
  CHECK(st.max_degree == 4);
  REQUIRE(st.max_out_degree);
  CHECK(*st.max_out_degree == 4);
}

TEST_CASE("hyperplane trees") {
  for (int n = 1; n <= 5; ++n) {
    Complex x(grid(1, n));
    // the class crossing every square: edges (0,j)-(1,j)
    int h = class_of(x, 0, n + 1);
    auto t = hyperplane_tree(x, h);
    CHECK(t.size() == n + 1);
    int edges = 0, leaves = 0;
    for (int i = 0; i < t.size(); ++i) {
      edges += static_cast<int>(t.adj[i].size());
      leaves += t.adj[i].size() == 1;
    }
    CHECK(edges / 2 == n);
    CHECK(leaves == 2);
  }
  Complex e(path(1));
  CHECK(hyperplane_tree(e, 0).size() == 1);

  Complex tri(square_tripod());
  auto t = hyperplane_tree(tri, class_of(tri, 0, 4));
  REQUIRE(t.size() == 4);
  int centre = t.local(tri.graph().edge_index(0, 4));
  CHECK(t.adj[centre].size() == 3);
  CHECK(t.distance(0, 0) == 0);
}

TEST_CASE("footprints and imprints") {
  Complex sq(grid(1, 1));
  CHECK(footprint(sq, 0, 1).size() == 4);
  auto t1 = hyperplane_tree(sq, 1);
  auto j = imprint(sq, t1, 0);
  CHECK(t1.is_subtree(j));

  Complex p(path(2));
  CHECK(footprint(p, 0, 1) == VertexSet{1});
  CHECK_THROWS_AS(footprint(Complex(path(3)), 0, 2), Error);

  Complex g22(grid(2, 2));
  int vmid = class_of(g22, 1, 2);  // second vertical-direction wall along j
  int h0 = class_of(g22, 0, 3);
  auto f = footprint(g22, h0, vmid);
  CHECK(f == VertexSet{1, 2, 4, 5});

  SUBCASE("footprints meet exactly when hyperplanes contact") {
    for (const auto& inst : corpus::two_dimensional()) {
      if (inst.g.num_vertices() > 60) continue;
      CAPTURE(inst.name);
      Complex x(inst.g);
      auto ws = oracle::walls(x);
      const int k = x.num_hyperplanes();
      for (int v = 0; v < k; ++v) {
        auto tv = hyperplane_tree(x, v);
        std::vector<int> nb;
        std::vector<std::vector<int>> fam, feet;
        for (int h = 0; h < k; ++h)
          if (h != v && oracle::contact(ws[h], ws[v])) {
            nb.push_back(h);
            fam.push_back(imprint(x, tv, h));
            CHECK(tv.is_subtree(fam.back()));
            auto fp = footprint(x, h, v);
            std::vector<int> want;
            std::set_intersection(ws[h].carrier.begin(), ws[h].carrier.end(), ws[v].carrier.begin(),
                                  ws[v].carrier.end(), std::back_inserter(want));
            CHECK(fp == want);
            feet.push_back(fp);
          }
        for (std::size_t a = 0; a < nb.size(); ++a)
          for (std::size_t b = a + 1; b < nb.size(); ++b) {
            std::vector<int> common, shadow;
            std::set_intersection(feet[a].begin(), feet[a].end(), feet[b].begin(), feet[b].end(),
                                  std::back_inserter(common));
            CHECK(!common.empty() == oracle::contact(ws[nb[a]], ws[nb[b]]));
            std::set_intersection(fam[a].begin(), fam[a].end(), fam[b].begin(), fam[b].end(),
                                  std::back_inserter(shadow));
            if (!common.empty()) CHECK(!shadow.empty());
          }
        auto c = colour_imprints(tv, fam, 2 * inst.g.max_degree());
        CHECK(palette_size(c) <= 2 * inst.g.max_degree());
        for (std::size_t a = 0; a < fam.size(); ++a)
          for (std::size_t b = a + 1; b < fam.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(fam[a].begin(), fam[a].end(), fam[b].begin(), fam[b].end(),
                                  std::back_inserter(common));
            if (!common.empty()) CHECK(c[a] != c[b]);
          }
      }
    }
  }
}

TEST_CASE("colour_imprints") {
  Complex x(grid(1, 4));
  int h = class_of(x, 0, 5);
  auto t = hyperplane_tree(x, h);
  CHECK(palette_size(colour_imprints(t, {{0}, {2}, {4}}, 4)) == 1);
  CHECK(palette_size(colour_imprints(t, {{1}, {1, 2}, {0, 1}}, 4)) == 3);
  CHECK_THROWS_AS(colour_imprints(t, {{1}, {1, 2}, {0, 1}}, 2), Error);
}

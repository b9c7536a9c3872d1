#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "corpus.hpp"
#include "cubeforest/complex.hpp"
#include "cubeforest/constructions.hpp"
#include "cubeforest/error.hpp"
#include "oracles.hpp"

using namespace cubeforest;

namespace {

Wallspace make_wallspace(int points, const std::vector<std::vector<int>>& side1) {
  Wallspace w;
  w.num_points = points;
  for (const auto& s : side1) {
    Bitset b(points);
    for (int p : s) b.set(p);
    w.walls.push_back(b);
  }
  return w;
}

// osculating pairs of x kept with probability p, on top of the crossings
Graph random_sandwich(const Complex& x, std::mt19937& rng, double p) {
  auto full = contact_graph(x, false);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < full.graph.edges().size(); ++i)
    if (full.kinds[i] == ContactKind::Cross || coin(rng)) es.push_back(full.graph.edges()[i]);
  return Graph(x.num_hyperplanes(), es);
}

// independent check of a recubulation against its target graph
void check_recubulation(const Complex& x, const Graph& target, const Recubulation& r) {
  Complex rc(r.graph);
  REQUIRE(rc.num_hyperplanes() == x.num_hyperplanes());
  CHECK(oracle::is_median(r.graph));
  std::set<int> image(r.image.begin(), r.image.end());
  CHECK(image.size() == r.image.size());
  auto ws = oracle::walls(rc);
  for (int a = 0; a < rc.num_hyperplanes(); ++a)
    for (int b = a + 1; b < rc.num_hyperplanes(); ++b)
      CHECK(oracle::cross(ws[a], ws[b]) == target.adjacent(r.hyperplane_of[a], r.hyperplane_of[b]));
  auto dx = oracle::floyd(x.graph());
  auto dr = oracle::floyd(r.graph);
  for (int u = 0; u < x.graph().num_vertices(); ++u)
    for (int v = 0; v < x.graph().num_vertices(); ++v) CHECK(dx[u][v] == dr[r.image[u]][r.image[v]]);
  const int delta = x.graph().max_degree();
  CHECK(r.graph.max_degree() <= delta * delta + delta);
}

}  // namespace

TEST_CASE("fixtures") {
  auto c4 = grid(1, 1);
  CHECK(c4.num_vertices() == 4);
  CHECK(c4.num_edges() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.neighbours(v).size() == 2);
  auto p = path(3);
  CHECK(p.num_vertices() == 4);
  CHECK(p.num_edges() == 3);
  CHECK(staircase(2).num_vertices() == 8);
  CHECK(square_tripod().num_vertices() == 8);
  CHECK(oracle::is_median(random_square_complex(7, 100)));
  CHECK(random_square_complex(7, 100).edges() == random_square_complex(7, 100).edges());
  for (const auto& inst : corpus::two_dimensional()) {
    CAPTURE(inst.name);
    CHECK(is_median_graph(inst.g).ok);
    CHECK(dimension(Complex(inst.g)) <= 2);
    CHECK(inst.g.num_vertices() <= 150);
  }
  CHECK(corpus::two_dimensional().size() >= 30);
}

TEST_CASE("simplex graphs") {
  auto one = simplex_graph(Graph(1, {}));
  CHECK(one.num_vertices() == 2);
  CHECK(one.num_edges() == 1);

  auto sq = simplex_graph(Graph(2, {{0, 1}}));
  CHECK(sq.num_vertices() == 4);
  CHECK(crossing_graph(Complex(sq)).num_edges() == 1);

  std::vector<std::vector<int>> cliques;
  auto k5 = simplex_graph(corpus::cycle_graph(5), &cliques);
  CHECK(k5.num_vertices() == 11);  // empty set, 5 vertices, 5 edges
  CHECK(cliques.size() == 11);
  Complex x(k5);
  CHECK(oracle::is_median(k5));
  CHECK(x.num_hyperplanes() == 5);
  auto cr = crossing_graph(x);
  CHECK(cr.num_edges() == 5);
  for (int h = 0; h < 5; ++h) CHECK(cr.neighbours(h).size() == 2);
  CHECK(oracle::chromatic_number(cr) == 3);
  CHECK(dimension(x) == 2);

  auto pet = simplex_graph(corpus::petersen());
  CHECK(oracle::chromatic_number(crossing_graph(Complex(pet))) == 3);
}

TEST_CASE("dual cube complexes") {
  auto edge = dual_cube_complex(make_wallspace(2, {{1}}));
  CHECK(edge.graph.num_vertices() == 2);
  CHECK(edge.graph.num_edges() == 1);

  auto sq = dual_cube_complex(make_wallspace(4, {{1, 3}, {2, 3}}));
  CHECK(sq.graph.num_vertices() == 4);
  CHECK(sq.graph.num_edges() == 4);

  auto nested = dual_cube_complex(make_wallspace(3, {{1, 2}, {2}}));
  CHECK(nested.graph.num_vertices() == 3);
  CHECK(nested.graph.num_edges() == 2);
  CHECK(nested.graph.max_degree() == 2);

  SUBCASE("random wallspaces give median graphs with one hyperplane per wall") {
    std::mt19937 rng(static_cast<unsigned>(corpus::base_seed()));
    for (int t = 0; t < 40; ++t) {
      const int pts = 3 + t % 5;
      std::uniform_int_distribution<unsigned> pick(1, (1u << pts) - 2);
      std::set<unsigned> seen;
      std::vector<std::vector<int>> sides;
      for (int i = 0; i < 1 + t % 6; ++i) {
        unsigned m = pick(rng);
        unsigned c = ((1u << pts) - 1) & ~m;
        if (seen.count(m) || seen.count(c)) continue;
        seen.insert(m);
        std::vector<int> s;
        for (int p = 0; p < pts; ++p)
          if (m >> p & 1) s.push_back(p);
        sides.push_back(s);
      }
      auto d = dual_cube_complex(make_wallspace(pts, sides));
      CHECK(oracle::is_median(d.graph));
      CHECK(Complex(d.graph).num_hyperplanes() == static_cast<int>(sides.size()));
      for (int p = 0; p < pts; ++p)
        for (std::size_t w = 0; w < sides.size(); ++w) {
          bool on1 = std::count(sides[w].begin(), sides[w].end(), p) > 0;
          CHECK(d.orientation[d.point_vertex[p]][w] == on1);
        }
    }
  }
}

TEST_CASE("recubulation") {
  Complex p2(path(2));
  auto full = contact_graph(p2).graph;
  auto r = recubulate(p2, full);
  CHECK(r.graph.num_vertices() == 4);
  CHECK(r.graph.num_edges() == 4);
  CHECK(crossing_graph(Complex(r.graph)).num_edges() == 1);
  check_recubulation(p2, full, r);

  Complex g(grid(2, 3));
  auto same = recubulate(g, crossing_graph(g));
  CHECK(same.graph.num_vertices() == g.graph().num_vertices());
  CHECK(same.graph.num_edges() == g.graph().num_edges());
  CHECK(same.added_points == 0);

  CHECK(recubulate(p2, Graph(2, {})).graph.num_vertices() == 3);
  CHECK_THROWS_AS(recubulate(Complex(path(3)), Graph(3, {{0, 2}})), Error);  // 0 and 2 do not contact
  CHECK_THROWS_AS(recubulate(g, Graph(g.num_hyperplanes(), {})), Error);     // crossings missing

  SUBCASE("corpus instances with small degree") {
    std::mt19937 rng(static_cast<unsigned>(corpus::base_seed()));
    int done = 0;
    for (const auto& inst : corpus::two_dimensional()) {
      if (inst.g.max_degree() > 4 || inst.g.num_vertices() > 70) continue;
      CAPTURE(inst.name);
      Complex x(inst.g);
      for (double p : {1.0, 0.5}) {
        auto target = random_sandwich(x, rng, p);
        auto rec = recubulate(x, target);
        check_recubulation(x, target, rec);
        CHECK(rec.dimension <= max_clique(target));
        ++done;
      }
    }
    CHECK(done >= 20);
  }
}

TEST_CASE("Burling graphs and boxes") {
  std::vector<std::vector<int>> probes;
  CHECK(burling_graph(1).num_vertices() == 1);
  CHECK(burling_graph(2).num_vertices() == 3);
  auto s3 = burling_graph(3, &probes);
  CHECK(s3.num_vertices() == 13);
  CHECK(oracle::clique_number(s3) == 2);
  CHECK(oracle::chromatic_number(s3) == 3);
  CHECK(burling_graph(4).num_vertices() == 181);

  auto b1 = burling(1);
  auto g1 = b1.intersection_graph();
  CHECK(oracle::clique_number(g1) <= 2);
  CHECK(oracle::chromatic_number(g1) >= 2);

  auto b2 = burling(2);
  auto g2 = b2.intersection_graph();
  CHECK(oracle::clique_number(g2) == 2);
  CHECK(oracle::chromatic_number(g2) == 3);
  // the realisation reproduces the abstract graph
  CHECK(g2.edges() == s3.edges());

  BoxFamily single;
  single.boxes.push_back(Box3{{{{0, 1}, {0, 1}, {0, 1}}}});
  CHECK(single.intersection_graph().num_edges() == 0);
  CHECK(oracle::chromatic_number(single.intersection_graph()) == 1);

  Box3 a{{{{0, 2}, {0, 2}, {0, 2}}}}, b{{{{2, 3}, {1, 3}, {0, 1}}}}, c{{{{3, 4}, {0, 1}, {0, 1}}}};
  CHECK(boxes_intersect(a, b));
  CHECK_FALSE(boxes_intersect(a, c));

  CHECK_THROWS_AS(burling(0), Error);
  try {
    burling(3);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.is_budget());
  }
}

TEST_CASE("box complexes") {
  Box3 b0{{{{0, 4}, {0, 4}, {0, 4}}}};
  auto cube = box_complex(b0, {});
  CHECK(cube.num_vertices() == 8);
  CHECK(cube.max_degree() == 3);
  auto sub = box_complex(b0, {std::vector<int>{2}, std::vector<int>{2}, std::vector<int>{2}});
  CHECK(sub.num_vertices() == 27);
  auto slab = box_complex(b0, {std::vector<int>{1, 3}, {}, {}});
  CHECK(slab.num_vertices() == 16);
  CHECK(Complex(slab).num_hyperplanes() == 5);
  CHECK_THROWS_AS(box_complex(b0, {std::vector<int>{4}, {}, {}}), Error);
}

TEST_CASE("lifted complexes") {
  auto empty = lifted_complex(BoxFamily{});
  CHECK(empty.graph.num_vertices() == 27);
  CHECK(empty.num_grid_vertices == 27);

  BoxFamily one;
  one.boxes.push_back(Box3{{{{1, 2}, {1, 2}, {1, 2}}}});
  auto l1 = lifted_complex(one);
  CHECK(oracle::is_median(l1.graph));
  Complex x1(l1.graph);
  CHECK(max_clique(pointed_contact_graph(x1, l1.alpha).graph) == 4);

  for (int n : {1, 2}) {
    CAPTURE(n);
    auto fam = burling(n);
    const int omega = max_clique(fam.intersection_graph());
    auto l = lifted_complex(fam);
    CHECK(is_median_graph(l.graph).ok);
    CHECK(l.graph.max_degree() <= 8);
    CHECK(l.graph.max_degree() <= omega + 6);
    Complex x(l.graph);
    CHECK(max_clique(pointed_contact_graph(x, l.alpha).graph) == omega + 3);
    CHECK(dimension(x) <= 4);  // three grid directions plus the lift
  }
}

TEST_CASE("counterexample family") {
  for (int n : {1, 2}) {
    CAPTURE(n);
    auto t = theorem2_family(n);
    Complex x(t.rec.graph);
    CHECK(is_median_graph(t.rec.graph).ok);
    CHECK(dimension(x) <= 5);
    CHECK(t.rec.graph.max_degree() <= 72);
    auto pointed = pointed_contact_graph(x, t.alpha).graph;
    CHECK(exact_chromatic_number(pointed) > n);
  }
  std::vector<int> block;
  auto c = chain(2, &block);
  CHECK(is_median_graph(c).ok);
  REQUIRE(block.size() == static_cast<std::size_t>(c.num_vertices()));
  CHECK(*std::max_element(block.begin(), block.end()) == 1);
  CHECK(c.max_degree() <= 72);
  auto x1 = theorem2_family(1), x2 = theorem2_family(2);
  // wedge at one vertex
  CHECK(c.num_vertices() == x1.rec.graph.num_vertices() + x2.rec.graph.num_vertices() - 1);
  CHECK(c.num_edges() == x1.rec.graph.num_edges() + x2.rec.graph.num_edges());
  CHECK_THROWS_AS(chain(0), Error);
}

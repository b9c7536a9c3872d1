#include <algorithm>
#include <map>

#include "doctest.h"

#include "corpus.hpp"
#include "cubeforest/complex.hpp"
#include "cubeforest/constructions.hpp"
#include "cubeforest/error.hpp"
#include "cubeforest/event_structure.hpp"
#include "event_corpus.hpp"
#include "oracles.hpp"

using namespace cubeforest;

namespace {

// es and its domain read back as a pointed complex agree under the event map
bool round_trip(const EventStructure& es) {
  auto d = domain(es);
  auto back = from_pointed_complex(Complex(d.graph), 0);
  if (back.size() != es.size()) return false;
  for (int a = 0; a < es.size(); ++a)
    for (int b = 0; b < es.size(); ++b) {
      const int ha = d.hyperplane_of_event[a], hb = d.hyperplane_of_event[b];
      if (es.leq(a, b) != back.leq(ha, hb) || es.conflict(a, b) != back.conflict(ha, hb)) return false;
    }
  return true;
}

// the domain of the structure read from (x, v) is x itself: the 0-cube u
// goes to the set of hyperplanes separating it from v
bool domain_recovers(const MedianGraph& g, int v) {
  Complex x(g);
  auto es = from_pointed_complex(x, v);
  auto d = domain(es);
  if (d.graph.num_vertices() != g.num_vertices() || d.graph.num_edges() != g.num_edges()) return false;
  std::map<Bitset, int> config;
  for (int c = 0; c < d.graph.num_vertices(); ++c) config[d.configurations[c]] = c;
  std::vector<int> phi(g.num_vertices(), -1);
  for (int u = 0; u < g.num_vertices(); ++u) {
    Bitset s(es.size());
    for (int h = 0; h < x.num_hyperplanes(); ++h)
      if (x.hyperplane(h).side(u) != x.hyperplane(h).side(v)) s.set(h);
    auto it = config.find(s);
    if (it == config.end()) return false;
    phi[u] = it->second;
  }
  for (const auto& [a, b] : g.edges())
    if (d.graph.edge_index(phi[a], phi[b]) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("relations and validation") {
  EventStructure empty(0, {}, {});
  CHECK(validate(empty).empty());

  EventStructure es(4, {{0, 1}, {1, 2}}, {{2, 3}});
  CHECK(es.leq(0, 2));
  CHECK(es.leq(3, 3));
  CHECK_FALSE(es.leq(2, 0));
  CHECK(es.concurrent(0, 3));
  CHECK(es.minimal_conflict(2, 3));
  CHECK_FALSE(es.independent(0, 1));
  CHECK(es.order_pairs().size() == 3);
  CHECK(es.covering_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(validate(es).empty());

  CHECK_FALSE(validate(EventStructure(1, {}, {{0, 0}})).empty());
  CHECK_FALSE(validate(EventStructure(2, {{0, 1}}, {{0, 1}})).empty());
  CHECK_FALSE(validate(EventStructure(3, {{1, 2}}, {{0, 1}})).empty());  // 0 # 2 missing
  CHECK_FALSE(validate(EventStructure(2, {{0, 1}, {1, 0}}, {})).empty());
  CHECK_THROWS_AS(EventStructure(2, {{0, 5}}, {}), Error);
  CHECK_THROWS_AS(domain(EventStructure(3, {{1, 2}}, {{0, 1}})), Error);

  // inherited conflict is not minimal
  EventStructure inh(3, {{1, 2}}, {{0, 1}, {0, 2}});
  CHECK(validate(inh).empty());
  CHECK(inh.minimal_conflict(0, 1));
  CHECK_FALSE(inh.minimal_conflict(0, 2));
}

TEST_CASE("domains") {
  auto sq = domain(EventStructure(2, {}, {}));
  CHECK(sq.graph.num_vertices() == 4);
  CHECK(sq.graph.num_edges() == 4);

  auto fork = domain(EventStructure(2, {}, {{0, 1}}));
  CHECK(fork.graph.num_vertices() == 3);
  CHECK(fork.graph.neighbours(0).size() == 2);
  Complex fx(fork.graph);
  CHECK(osculates(fx.hyperplane(0), fx.hyperplane(1)));

  auto cube = domain(EventStructure(3, {}, {}));
  CHECK(cube.graph.num_vertices() == 8);
  CHECK(cube.graph.num_edges() == 12);
  CHECK(dimension(Complex(cube.graph)) == 3);

  CHECK_THROWS_AS(domain(EventStructure(12, {}, {}), 100), Error);
}

TEST_CASE("structures read from pointed complexes") {
  auto sq = from_pointed_complex(Complex(grid(1, 1)), 0);
  CHECK(sq.size() == 2);
  CHECK(sq.concurrent(0, 1));

  auto mid = from_pointed_complex(Complex(path(2)), 1);
  CHECK(mid.minimal_conflict(0, 1));

  auto end = from_pointed_complex(Complex(path(2)), 0);
  CHECK((end.leq(0, 1) || end.leq(1, 0)));
  CHECK(validate(end).empty());

  for (const auto& inst : corpus::two_dimensional()) {
    if (inst.g.num_vertices() > 40) continue;
    CAPTURE(inst.name);
    for (int v = 0; v < inst.g.num_vertices(); v += 3) {
      auto es = from_pointed_complex(Complex(inst.g), v);
      CHECK(validate(es).empty());
      CHECK(domain_recovers(inst.g, v));
    }
  }
}

TEST_CASE("round trip on every small structure") {
  std::map<int, int> count;
  for (int n = 0; n <= 4; ++n)
    corpus::for_each_event_structure(n, [&](const auto& order, const auto& conflict) {
      EventStructure es(n, order, conflict);
      REQUIRE(validate(es).empty());
      CHECK(round_trip(es));
      ++count[n];
    });
  // naturally labelled posets alone: 1, 1, 2, 7, 40
  CHECK(count[0] == 1);
  CHECK(count[1] == 1);
  CHECK(count[2] == 3);  // chain, antichain, antichain in conflict
  CHECK(count[4] >= 40);
}

TEST_CASE("nice labelings") {
  auto two = nice_label(EventStructure(2, {}, {}), LabelMethod::Exact);
  CHECK(two.num_labels == 2);

  // conflict-free: chains need one label, antichains as many as events
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> chain;
    for (int i = 0; i + 1 < n; ++i) chain.emplace_back(i, i + 1);
    EventStructure c(n, chain, {}), a(n, {}, {});
    CHECK(nice_label(c, LabelMethod::Exact).num_labels == 1);
    CHECK(nice_label(a, LabelMethod::Exact).num_labels == n);
    CHECK(a.degree() == n);
  }

  CHECK_FALSE(verify_nice(EventStructure(2, {}, {}), {0, 0}));
  CHECK(verify_nice(EventStructure(2, {{0, 1}}, {}), {0, 0}));
  CHECK_THROWS_AS(nice_label(EventStructure(3, {}, {}), LabelMethod::Theorem1), Error);

  int degree_two = 0;
  for (int n = 1; n <= 5; ++n)
    corpus::for_each_event_structure(n, [&](const auto& order, const auto& conflict) {
      EventStructure es(n, order, conflict);
      auto ex = nice_label(es, LabelMethod::Exact);
      CHECK(verify_nice(es, ex.label));
      CHECK(ex.num_labels >= es.degree());
      auto gr = nice_label(es, LabelMethod::Greedy);
      CHECK(verify_nice(es, gr.label));
      if (es.degree() == 2) {
        ++degree_two;
        CHECK(ex.num_labels == 2);
        auto t1 = nice_label(es, LabelMethod::Theorem1);
        CHECK(verify_nice(es, t1.label));
      }
    });
  CHECK(degree_two > 100);
}

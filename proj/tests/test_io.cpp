#include "doctest.h"

#include "corpus.hpp"
#include "cubeforest/complex.hpp"
#include "cubeforest/constructions.hpp"
#include "cubeforest/error.hpp"
#include "cubeforest/io.hpp"
#include "cubeforest/pipeline.hpp"

using namespace cubeforest;
using cubeforest::io::json;

TEST_CASE("graphs round-trip") {
  auto g = MedianGraph(grid(2, 3).num_vertices(), grid(2, 3).edges(), 5);
  auto j = io::to_json(g);
  auto back = io::median_graph_from_json(io::parse(io::dump(j)));
  CHECK(back.edges() == g.edges());
  CHECK(back.basepoint == g.basepoint);
  CHECK(io::dump(io::to_json(back)) == io::dump(j));

  auto plain = io::graph_from_json(io::to_json(corpus::petersen()));
  CHECK(plain.edges() == corpus::petersen().edges());
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(io::parse("{not json"), Error);
  CHECK_THROWS_AS(io::median_graph_from_json(io::parse(R"({"vertices":[0,1]})")), Error);
  CHECK_THROWS_AS(io::median_graph_from_json(io::parse(R"({"vertices":[0,2],"edges":[]})")), Error);
  CHECK_THROWS_AS(io::median_graph_from_json(io::parse(R"({"vertices":[0,1],"edges":[[0,3]]})")), Error);
  try {
    io::median_graph_from_json(io::parse(R"({"vertices":[0,1],"edges":[[0,3]]})"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVertex);
  }
  CHECK_THROWS_AS(io::colouring_from_json(io::parse(R"({"colours":{"0":1}})"), 2), Error);
  CHECK_THROWS_AS(io::colouring_from_json(io::parse(R"({"colours":{"0":1,"9":0}})"), 2), Error);
}

TEST_CASE("colourings") {
  Complex x(staircase(3));
  auto r = colour_contact_graph(x);
  auto j = io::colouring_json("theorem1", r.colouring, true, r.delta);
  CHECK(j["num_colours"] == r.palette);
  CHECK(io::colouring_from_json(j, x.num_hyperplanes()) == r.colouring);
  // deterministic output
  CHECK(io::dump(j) == io::dump(io::colouring_json("theorem1", colour_contact_graph(x).colouring, true, r.delta)));
}

TEST_CASE("contact graph output") {
  Complex sq(grid(1, 1));
  auto j = io::contact_graph_json(contact_graph(sq));
  REQUIRE(j["edges"].size() == 1);
  CHECK(j["edges"][0][2] == "cross");
  auto dot = io::contact_graph_dot(contact_graph(Complex(path(2))));
  CHECK(dot.find("0 -- 1 [style=dashed]") != std::string::npos);
  auto hs = io::hyperplanes_json(sq);
  CHECK(hs.size() == 2);
}

TEST_CASE("wallspaces with named points") {
  auto w = io::wallspace_from_json(io::parse(R"({"points":["a","b","c","d"],
      "walls":[[["a","b"],["c","d"]],[["a","c"],["b","d"]]]})"));
  CHECK(w.num_points == 4);
  auto d = dual_cube_complex(w);
  CHECK(d.graph.num_vertices() == 4);
  auto again = io::wallspace_from_json(io::to_json(w));
  CHECK(again.walls == w.walls);
  CHECK_THROWS_AS(io::wallspace_from_json(io::parse(R"({"points":[1,2],"walls":[[[1],[3]]]})")), Error);
  CHECK_THROWS_AS(io::wallspace_from_json(io::parse(R"({"points":[1,2,3],"walls":[[[1],[2]]]})")), Error);
}

TEST_CASE("boxes and event structures") {
  auto b = burling(1);
  auto back = io::boxes_from_json(io::to_json(b));
  REQUIRE(back.boxes.size() == b.boxes.size());
  CHECK(back.intersection_graph().edges() == b.intersection_graph().edges());
  CHECK_THROWS_AS(io::boxes_from_json(io::parse(R"({"boxes":[[[2,1],[0,1],[0,1]]]})")), Error);

  EventStructure es(4, {{0, 1}, {1, 2}, {0, 2}}, {{2, 3}});
  auto j = io::to_json(es);
  CHECK(j["causality"].size() == 2);  // covers only
  auto es2 = io::event_structure_from_json(j);
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      CHECK(es.leq(a, c) == es2.leq(a, c));
      CHECK(es.conflict(a, c) == es2.conflict(a, c));
    }
  auto named = io::event_structure_from_json(io::parse(R"({"events":["x","y"],"conflict":[["x","y"]]})"));
  CHECK(named.minimal_conflict(0, 1));
  CHECK_THROWS_AS(io::event_structure_from_json(io::parse(R"({"events":["x"],"conflict":[["x","z"]]})")), Error);
}

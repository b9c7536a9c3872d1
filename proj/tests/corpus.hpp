#pragma once

#include <string>
#include <vector>

#include "cubeforest/constructions.hpp"
#include "cubeforest/graph.hpp"

namespace corpus {

struct Instance {
  std::string name;
  cubeforest::MedianGraph g;
};

inline cubeforest::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return cubeforest::Graph(n, es);
}

inline cubeforest::Graph petersen() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return cubeforest::Graph(10, es);
}

inline cubeforest::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return cubeforest::Graph(n, es);
}

inline cubeforest::Graph complete_bipartite(int m, int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) es.emplace_back(i, m + j);
  return cubeforest::Graph(m + n, es);
}

inline std::uint64_t base_seed() { return cubeforest::seed_from_env(1); }

// Two-dimensional instances: grids up to 6x6, paths, staircases, the
// tripod, two simplex graphs and ten seeded random square complexes.
inline std::vector<Instance> two_dimensional() {
  using namespace cubeforest;
  std::vector<Instance> out;
  for (int m = 1; m <= 6; ++m)
    for (int n = m; n <= 6; ++n) out.push_back({"grid" + std::to_string(m) + "x" + std::to_string(n), grid(m, n)});
  for (int n : {1, 2, 4, 7}) out.push_back({"path" + std::to_string(n), path(n)});
  for (int k = 1; k <= 6; ++k) out.push_back({"staircase" + std::to_string(k), staircase(k)});
  out.push_back({"tripod", square_tripod()});
  out.push_back({"kappa(C5)", simplex_graph(cycle_graph(5))});
  out.push_back({"kappa(Petersen)", simplex_graph(petersen())});
  const auto s = base_seed();
  for (std::uint64_t i = 0; i < 10; ++i)
    out.push_back({"random" + std::to_string(s + i), random_square_complex(s + i, 150)});
  return out;
}

}  // namespace corpus

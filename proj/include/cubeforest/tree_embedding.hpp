#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubeforest/complex.hpp"
#include "cubeforest/graph.hpp"

namespace cubeforest {

// One tree of a product decomposition: the quotient of X by the walls of
// one colour class. Tree vertex t stands for the 0-cubes sharing a side on
// every wall of the class; representative[t] is the smallest of them.
struct TreeFactor {
  int colour = 0;
  std::vector<int> walls;           // hyperplane ids, sorted
  Graph tree;
  std::vector<int> vertex_map;      // 0-cube -> tree vertex
  std::vector<int> representative;  // tree vertex -> 0-cube
};

// colouring is indexed by hyperplane and must be proper on the crossing graph
std::vector<TreeFactor> embed_in_trees(const Complex& x, const Colouring& colouring);

struct IsometryReport {
  bool ok = true;
  std::optional<std::pair<int, int>> counterexample;
  int expected = 0;  // d_X
  int got = 0;       // sum over factors
};

IsometryReport verify_isometry(const Complex& x, const std::vector<TreeFactor>& factors);

struct TauBound {
  int value = 0;
  std::string method;  // "exact", "theorem1" or "greedy"
  Colouring colouring;
};

// colours of the best crossing-graph colouring within budget; exact when
// the oracle finishes
TauBound tau_upper(const Complex& x, std::int64_t budget = 2'000'000);

}  // namespace cubeforest

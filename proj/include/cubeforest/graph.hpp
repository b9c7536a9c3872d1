#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cubeforest {

// Plain undirected simple graph on 0..n-1, used for contact, crossing and
// conflict graphs. Same canonical edge order as MedianGraph.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  int max_degree() const;
  std::vector<int> bfs(int src) const;
  // induced subgraph on the given (sorted) vertices, renumbered in order
  Graph induced(const std::vector<int>& vs) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// colour per vertex, colours are nonnegative integers
using Colouring = std::vector<int>;

int palette_size(const Colouring& c);

// returns the first monochromatic edge, if any
std::optional<std::pair<int, int>> improper_edge(const Graph& g, const Colouring& c);
bool verify_colouring(const Graph& g, const Colouring& c);

// smallest-available-colour greedy; empty order means 0..n-1
Colouring greedy_colour(const Graph& g, const std::vector<int>& order = {});

// Exact chromatic number by DSatur-style branch and bound. Throws
// BudgetExceeded when more than `budget` search nodes are needed.
int exact_chromatic_number(const Graph& g, Colouring* witness = nullptr,
                           std::int64_t budget = 20'000'000);

// Exact clique number by branch and bound with greedy-colouring bounds.
int max_clique(const Graph& g, std::vector<int>* witness = nullptr);

}  // namespace cubeforest

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cubeforest/complex.hpp"
#include "cubeforest/graph.hpp"
#include "cubeforest/median_graph.hpp"

namespace cubeforest {

// ---- fixtures -----------------------------------------------------------

// [0,m]x[0,n] grid; vertex (i,j) has id i*(n+1)+j
MedianGraph grid(int m, int n);
// path with n edges
MedianGraph path(int n);
// diagonal strip of 2k-1 unit squares: cells (i,i) and (i,i+1)
MedianGraph staircase(int k);
// star K_{1,3} times an edge: three squares sharing the edge 0-4
MedianGraph square_tripod();
// seed from CUBEFOREST_SEED when set, otherwise the fallback
std::uint64_t seed_from_env(std::uint64_t fallback);
// union of unit grid squares grown at random; every accepted step keeps
// the 1-skeleton median
MedianGraph random_square_complex(std::uint64_t seed, int max_vertices = 150);

// ---- simplex graphs and wallspaces --------------------------------------

// median graph on the cliques of g; cliques[i] lists the members of vertex i
MedianGraph simplex_graph(const Graph& g, std::vector<std::vector<int>>* cliques = nullptr);

struct Wallspace {
  int num_points = 0;
  std::vector<Bitset> walls;  // bit p set iff point p lies on side 1
};

struct DualComplex {
  MedianGraph graph;
  std::vector<Bitset> orientation;  // per vertex: bit w is the side chosen on wall w
  std::vector<int> point_vertex;    // principal orientation of each point
};

DualComplex dual_cube_complex(const Wallspace& w, std::size_t budget = 2'000'000);

// ---- recubulation -------------------------------------------------------

struct Recubulation {
  MedianGraph graph;
  std::vector<int> image;          // vertex of X -> vertex of R
  std::vector<int> hyperplane_of;  // hyperplane of R -> hyperplane of X
  int added_points = 0;
  int dimension = 0;
};

// gamma_alpha is a graph on the hyperplanes of x with crossing(x) <= gamma_alpha <= contact(x)
Recubulation recubulate(const Complex& x, const Graph& gamma_alpha,
                        std::size_t budget = 2'000'000);

// ---- boxes --------------------------------------------------------------

struct Box3 {
  std::array<std::array<int, 2>, 3> iv{};  // closed intervals, lo < hi
};

bool boxes_intersect(const Box3& a, const Box3& b);

struct BoxFamily {
  std::vector<Box3> boxes;
  Graph intersection_graph() const;
};

// Abstract Burling graph S_k (k >= 1) and its probes.
Graph burling_graph(int k, std::vector<std::vector<int>>* probes = nullptr);
// burling(n) realises S_{n+1} by boxes; certified chi > n and omega <= 2
BoxFamily burling(int n, std::int64_t budget = 5'000'000);
// Boxes whose intersection graph is exactly g, found by a difference
// constraint search; throws BudgetExceeded past the node budget.
BoxFamily realise_boxes(const Graph& g, std::int64_t budget);

// grid on B0 subdivided by axis-parallel planes (coordinates per axis)
MedianGraph box_complex(const Box3& b0, const std::array<std::vector<int>, 3>& planes);

struct LiftedComplex {
  MedianGraph graph;  // basepoint alpha
  int alpha = 0;
  int beta = 0;
  int num_grid_vertices = 0;
};

LiftedComplex lifted_complex(const BoxFamily& family);

struct Theorem2Instance {
  LiftedComplex lifted;
  Recubulation rec;
  int alpha = 0;  // vertices of rec.graph
  int beta = 0;
};

Theorem2Instance theorem2_family(int n, std::size_t budget = 2'000'000);

// wedge of X_1..X_k, beta of each block glued to alpha of the next
MedianGraph chain(int k, std::vector<int>* block_of_vertex = nullptr);

}  // namespace cubeforest

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubeforest/complex.hpp"
#include "cubeforest/graph.hpp"

namespace cubeforest {

// Pairwise hyperplane relations of one complex, computed once. Trees,
// footprints and imprints are built on demand and cached.
class Geometry {
 public:
  explicit Geometry(const Complex& x);

  const Complex& complex() const { return *x_; }
  int size() const { return k_; }
  int delta() const { return delta_; }
  const ContactGraph& gamma() const { return gamma_; }
  bool cross(int a, int b) const { return rel_[idx(a, b)] == 2; }
  bool contact(int a, int b) const { return rel_[idx(a, b)] != 0; }
  bool osculate(int a, int b) const { return rel_[idx(a, b)] == 1; }
  // side of wall w holding hyperplane h; meaningful when w != h and they do not cross
  int side_of(int w, int h) const { return side_[idx(w, h)]; }
  // w separates a from b
  bool separates(int w, int a, int b) const;
  const DistanceMatrix& dist() const;
  const HyperplaneTree& tree(int h) const;
  const VertexSet& footprint(int h, int v) const;
  // J(h, v) as local nodes of tree(v)
  const std::vector<int>& imprint(int h, int v) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * k_ + b; }
  const Complex* x_;
  int k_ = 0;
  int delta_ = 0;
  ContactGraph gamma_;
  std::vector<std::uint8_t> rel_;  // 0 none, 1 osculate, 2 cross
  std::vector<std::uint8_t> side_;
  mutable std::unique_ptr<DistanceMatrix> dist_;
  mutable std::vector<std::unique_ptr<HyperplaneTree>> trees_;
  mutable std::map<std::pair<int, int>, VertexSet> footprints_;
  mutable std::map<std::pair<int, int>, std::vector<int>> imprints_;
};

// ---- grading ------------------------------------------------------------

struct Grading {
  int base = -1;
  std::vector<int> grade;                     // per hyperplane
  std::vector<std::vector<int>> spheres;      // spheres[r], sorted
  std::vector<int> cluster;                   // per hyperplane, index into clusters
  std::vector<std::vector<int>> clusters;     // members sorted; ordered by (grade, min id)
};

Grading grade(const Graph& gamma, int base);

// largest contact-graph distance inside a cluster, over all clusters
int max_cluster_diameter(const Graph& gamma, const Grading& gr);

// ---- canonical paths ----------------------------------------------------

struct CanonicalPath {
  std::vector<int> path;    // H_0 .. H_r
  std::vector<int> points;  // y_1 .. y_r, y_i in N(H_{i-1}) and N(H_i)
  std::vector<int> weight;  // (|R_{r-1}|, ..., |R_1|)
};

// Lexicographically least weight over all geodesics and concatenable
// realizations, ties broken by the smallest hyperplane sequence. One
// dynamic program serves every target.
class CanonicalPaths {
 public:
  CanonicalPaths(const Geometry& geo, const Grading& gr);
  CanonicalPath path(int h) const;
  int grandfather(int h) const;  // needs grade >= 2

 private:
  struct State {
    std::vector<int> weight;
    std::vector<int> seq;
    int prev_h = -1;
    int prev_y = -1;
  };
  const Geometry& geo_;
  const Grading& gr_;
  // state for (hyperplane, carrier vertex): realization ends at that vertex
  std::vector<std::map<int, State>> best_;
  std::vector<int> grandfather_;
  std::vector<std::pair<int, int>> final_;  // per target: (H_{r-1}, y_r)
};

struct CombingViolation {
  int h1, h2, g1, g2;
};
// pairs in a common cluster of grade >= 2 whose grandfathers neither
// coincide nor contact
std::vector<CombingViolation> check_weak_combing(const Geometry& geo, const Grading& gr,
                                                 const CanonicalPaths& cp);

// ---- hyperplane distance -------------------------------------------------

// least size of a maximal separating chain for h relative to u; 0 iff they contact
int hyperplane_distance(const Geometry& geo, int u, int h, std::size_t budget = 1'000'000);

// ---- fathers and the graph Upsilon(U) -----------------------------------

struct FatherData {
  int h = -1;
  int grandfather = -1;
  std::vector<int> potential;         // PF(h), sorted
  std::vector<int> iterated_imprint;  // IJ(h,U), local nodes of tree(U)
  int root = -1;                      // b_h
  int root_depth = 0;
  int father = -1;
};

FatherData fathers(const Geometry& geo, int u, int h);
// strict order on R(U): roots along tree paths from b*, id order on equal roots
bool precedes(const Geometry& geo, const FatherData& a, const FatherData& b);

// throws NoSeparator or NonUniqueAtDepth2
int separating_osculator(const Geometry& geo, int u, const FatherData& fd, int d);

struct UpsilonDecomposition {
  int u = -1;
  std::vector<int> members;  // R(U), sorted
  std::vector<FatherData> fd;
  std::vector<int> distance;
  std::vector<int> sep;
  std::vector<char> father_separated;
  Graph all, part0, part1, part2;  // on local indices
  int local(int h) const;
};

UpsilonDecomposition build_upsilon(const Geometry& geo, int u, const std::vector<int>& members);

struct UpsilonColouring {
  Colouring c0, c1, c2, combined;
  int palette = 0;
};

UpsilonColouring colour_upsilon(const Geometry& geo, const UpsilonDecomposition& dec);

// ---- ball and global colourings ------------------------------------------

struct PipelineStats {
  int imprint_colourings = 0;
  int max_imprint_colours = 0;  // compared against 2*delta
  int upsilon_graphs = 0;       // grandfathers processed, each bipartition succeeded
  int max_upsilon_colours = 0;  // compared against 2*delta^2
  int max_upsilon1_colours = 0;
  int max_upsilon2_colours = 0;
  int upsilon_edges[3] = {0, 0, 0};
  int balls = 0;
  int max_ball_colours = 0;
};

struct BallColouring {
  int center = -1;
  int radius = 0;
  std::vector<int> members;  // sorted
  std::map<int, int> colour;
  int palette = 0;
};

BallColouring colour_ball(const Geometry& geo, int v0, int r, PipelineStats* stats = nullptr);

struct Theorem1Result {
  Colouring colouring;
  int palette = 0;
  int delta = 0;
  PipelineStats stats;
};

// epsilon(delta) = 2 * 582613 * delta^26, saturating
long double palette_bound(int delta);

Theorem1Result colour_contact_graph(const Complex& x);

// Delta <= Delta_0 + 2 for the given basepoint
bool check_degree_bound(const Complex& x, int basepoint);

}  // namespace cubeforest

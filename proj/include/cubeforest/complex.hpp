#pragma once

#include <memory>
#include <vector>

#include "cubeforest/graph.hpp"
#include "cubeforest/median_graph.hpp"

namespace cubeforest {

// A median graph together with its hyperplanes and the incidence data
// needed to talk about carriers, footprints and imprints.
class Complex {
 public:
  explicit Complex(MedianGraph g);

  const MedianGraph& graph() const { return g_; }
  int num_hyperplanes() const { return static_cast<int>(hyps_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyps_; }
  const Hyperplane& hyperplane(int h) const { return hyps_[h]; }
  int edge_class(int e) const { return edge_class_[e]; }
  // the edge of class h at vertex v, or -1
  int edge_at(int v, int h) const;
  // the other endpoint of the class-h edge at v, or -1
  int across(int v, int h) const;
  // hyperplane classes of the edges at v, sorted
  std::vector<int> classes_at(int v) const;

 private:
  MedianGraph g_;
  std::vector<Hyperplane> hyps_;
  std::vector<int> edge_class_;
  std::vector<std::vector<std::pair<int, int>>> inc_;  // per vertex (class, edge), sorted
};

enum class ContactKind { Cross, Osculate };

bool crosses(const Hyperplane& a, const Hyperplane& b);
bool contacts(const Hyperplane& a, const Hyperplane& b);
bool osculates(const Hyperplane& a, const Hyperplane& b);

// Graph on hyperplane ids with a label on every edge.
struct ContactGraph {
  Graph graph;
  std::vector<ContactKind> kinds;  // parallel to graph.edges()
  ContactKind kind(int a, int b) const;
  Graph crossing_part() const;
};

// Full contact graph; throws CliqueDegreeMismatch unless its clique number
// equals the maximum vertex degree of the complex.
ContactGraph contact_graph(const Complex& x, bool verify_clique = true);
Graph crossing_graph(const Complex& x);
// Crossings plus osculations realised by two edges leaving a common vertex
// on the basepoint side of both hyperplanes.
ContactGraph pointed_contact_graph(const Complex& x, int basepoint);

// dimension = clique number of the crossing graph
int dimension(const Complex& x);
ComplexStats complex_stats(const Complex& x);

// The hyperplane of a 2-dimensional complex as a tree: nodes are the edges
// of the class, adjacent when opposite in a square.
struct HyperplaneTree {
  int hyperplane = -1;
  std::vector<int> nodes;                 // edge indices, sorted
  std::vector<std::vector<int>> adj;      // local node ids
  int root = 0;
  std::vector<int> depth, parent;

  int local(int edge) const;  // -1 when the edge is not in the class
  int size() const { return static_cast<int>(nodes.size()); }
  int distance(int a, int b) const;
  // BFS distances in the tree from a set of local nodes
  std::vector<int> distances_from(const std::vector<int>& sources) const;
  bool is_subtree(const std::vector<int>& locals) const;
};

HyperplaneTree hyperplane_tree(const Complex& x, int h, int root = 0);

VertexSet footprint(const Complex& x, int h, int v);
// projection of F(h,v) to the tree of v: sorted local node ids
std::vector<int> imprint(const Complex& x, const HyperplaneTree& vtree, int h);

// Greedy colouring of a family of subtrees of one tree. Subtrees are taken
// in order of their shallowest node, which uses exactly as many colours as
// the largest number of subtrees through one node. Throws DegreeExceeded
// if some node carries more than max_load subtrees.
Colouring colour_imprints(const HyperplaneTree& tree, const std::vector<std::vector<int>>& family,
                          int max_load);

}  // namespace cubeforest

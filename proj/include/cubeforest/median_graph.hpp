#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cubeforest {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using VertexSet = std::vector<int>;  // always sorted, no duplicates

// Finite simple graph on dense vertex ids 0..n-1. Edges are kept as
// canonical (min,max) pairs in lexicographic order; adjacency lists are
// sorted. Nothing here assumes the median property; see is_median_graph.
class MedianGraph {
 public:
  MedianGraph() = default;
  MedianGraph(int n, std::vector<std::pair<int, int>> edges,
              std::optional<int> basepoint = std::nullopt);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  // index into edges(), or -1
  int edge_index(int u, int v) const;
  int max_degree() const;
  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  std::optional<int> basepoint;

  // BFS distances from src; unreachable vertices get -1.
  std::vector<int> bfs(int src) const;
  bool connected() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> adj_edge_;  // parallel to adj_
};

// Dense all-pairs distance table.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const MedianGraph& g);
  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int size() const { return n_; }

 private:
  int n_ = 0;
  std::vector<std::uint16_t> d_;
};

struct Hyperplane {
  int id = 0;
  std::vector<int> edges;  // indices into MedianGraph::edges()
  VertexSet half_a;        // contains the lower endpoint side of the first edge
  VertexSet half_b;
  VertexSet carrier;
  Bitset in_b;             // in_b[v] iff v in half_b
  Bitset carrier_bits;
  int side(int v) const { return in_b[v] ? 1 : 0; }
};

struct MedianCheck {
  bool ok = true;
  std::optional<std::array<int, 3>> triple;  // counterexample when available
  std::string reason;
};

int dist(const MedianGraph& g, int u, int v);
bool in_interval(const DistanceMatrix& d, int u, int v, int x);
int median(const MedianGraph& g, int u, int v, int w);
int median(const DistanceMatrix& d, int u, int v, int w);

// Exact triple enumeration up to a few hundred vertices; beyond that a
// certificate through the hypercube labelling is used (no triple then).
MedianCheck is_median_graph(const MedianGraph& g);
MedianCheck median_by_triples(const MedianGraph& g);
MedianCheck median_by_labelling(const MedianGraph& g);

std::vector<Hyperplane> theta_classes(const MedianGraph& g);

bool is_convex(const MedianGraph& g, const VertexSet& s);
int gate(const MedianGraph& g, const VertexSet& s, int v);

struct ComplexStats {
  int max_degree = 0;
  std::optional<int> max_out_degree;  // needs a basepoint
  int dimension = 0;
};

// out-degree of v with respect to base: neighbours strictly farther from base
int out_degree(const MedianGraph& g, const std::vector<int>& dist_from_base, int v);

}  // namespace cubeforest

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubeforest/complex.hpp"
#include "cubeforest/graph.hpp"
#include "cubeforest/median_graph.hpp"

namespace cubeforest {

// Events 0..n-1 with a causal order and a binary conflict relation. The
// order is closed reflexively and transitively on construction; conflict
// is symmetrised but otherwise stored as given, so validate() can report
// missing propagation.
class EventStructure {
 public:
  EventStructure() = default;
  EventStructure(int n, std::vector<std::pair<int, int>> causality,
                 std::vector<std::pair<int, int>> conflict);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool conflict(int a, int b) const { return conflict_[a][b]; }
  bool concurrent(int a, int b) const;
  bool minimal_conflict(int a, int b) const;
  bool independent(int a, int b) const { return concurrent(a, b) || minimal_conflict(a, b); }

  // strict pairs a < b of the closed order, and conflict pairs a < b
  std::vector<std::pair<int, int>> order_pairs() const;
  std::vector<std::pair<int, int>> conflict_pairs() const;
  // covering pairs of the order
  std::vector<std::pair<int, int>> covering_pairs() const;

  Graph independence_graph() const;
  int degree() const;

 private:
  int n_ = 0;
  std::vector<std::vector<char>> leq_, conflict_;
};

// every axiom violation in words; empty means valid
std::vector<std::string> validate(const EventStructure& es);

struct Domain {
  MedianGraph graph;                            // basepoint 0 is the empty configuration
  std::vector<Bitset> configurations;           // per vertex
  std::vector<int> event_of_hyperplane;
  std::vector<int> hyperplane_of_event;
};

Domain domain(const EventStructure& es, std::size_t budget = 1'000'000);

EventStructure from_pointed_complex(const Complex& x, int basepoint);

enum class LabelMethod { Theorem1, Greedy, Exact };

struct Labeling {
  std::vector<int> label;  // per event
  int num_labels = 0;
  LabelMethod method = LabelMethod::Greedy;
};

Labeling nice_label(const EventStructure& es, LabelMethod method, std::int64_t budget = 2'000'000);
// same, reusing a domain already built from es
Labeling nice_label(const EventStructure& es, const Domain& d, LabelMethod method,
                    std::int64_t budget = 2'000'000);
bool verify_nice(const EventStructure& es, const std::vector<int>& label);

}  // namespace cubeforest

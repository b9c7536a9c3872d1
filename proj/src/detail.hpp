#pragma once

// Internal helpers shared between translation units.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cubeforest/median_graph.hpp"

namespace cubeforest::detail {

// every 4-cycle once, as (u,a,c,b) with u the smallest vertex and a<b
std::vector<std::array<int, 4>> squares(const MedianGraph& g);

// class id per edge, classes numbered by their smallest edge
std::vector<int> edge_classes(const MedianGraph& g, int* num_classes);

bool split_by_classes(const MedianGraph& g, const std::vector<int>& cls, int k,
                      std::vector<Bitset>& in_b, std::string& reason);

// all orientations of k walls that agree pairwise with pair_ok
// (pair_ok[j][i], i<j, bit 2*a+b allows side a on i with side b on j)
std::vector<Bitset> consistent_orientations(const std::vector<std::vector<std::uint8_t>>& pair_ok,
                                            int k, std::size_t budget, bool* exceeded);

}  // namespace cubeforest::detail

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cubeforest/event_structure.hpp"

namespace corpus {

// Every valid event structure on n events whose order is naturally labelled
// (a < b in the order implies a < b as integers). Each isomorphism class
// appears at least once. The callback receives the order and conflict pairs.
template <class F>
void for_each_event_structure(int n, F&& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const int m = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i) id[pairs[i].first][pairs[i].second] = id[pairs[i].second][pairs[i].first] = i;

  for (std::uint32_t rel = 0; rel < (1u << m); ++rel) {
    auto lt = [&](int a, int b) { return a < b && (rel >> id[a][b] & 1); };
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = a + 1; b < n && transitive; ++b)
        for (int c = b + 1; c < n && transitive; ++c)
          if (lt(a, b) && lt(b, c) && !lt(a, c)) transitive = false;
    if (!transitive) continue;
    auto le = [&](int a, int b) { return a == b || lt(a, b); };

    // conflict sets are the up-closed sets of incomparable pairs
    std::vector<int> free;           // pair index per incomparable pair
    std::vector<int> local(m, -1);
    for (int i = 0; i < m; ++i)
      if (!(rel >> i & 1)) {
        local[i] = static_cast<int>(free.size());
        free.push_back(i);
      }
    const int k = static_cast<int>(free.size());
    std::vector<std::uint32_t> up(k, 0);
    std::uint32_t forbidden = 0;
    for (int i = 0; i < k; ++i) {
      auto [a, b] = pairs[free[i]];
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (!((le(a, x) && le(b, y)) || (le(b, x) && le(a, y)))) continue;
          if (x == y || le(x, y) || le(y, x)) {
            forbidden |= 1u << i;
          } else {
            up[i] |= 1u << local[id[x][y]];
          }
        }
    }
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < m; ++i)
      if (rel >> i & 1) order.push_back(pairs[i]);
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
      if (s & forbidden) continue;
      bool closed = true;
      for (int i = 0; i < k && closed; ++i)
        if ((s >> i & 1) && (up[i] & ~s)) closed = false;
      if (!closed) continue;
      std::vector<std::pair<int, int>> conflict;
      for (int i = 0; i < k; ++i)
        if (s >> i & 1) conflict.push_back(pairs[free[i]]);
      f(order, conflict);
    }
  }
}

}  // namespace corpus

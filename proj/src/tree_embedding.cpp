#include "cubeforest/tree_embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cubeforest/error.hpp"
#include "cubeforest/pipeline.hpp"

namespace cubeforest {

std::vector<TreeFactor> embed_in_trees(const Complex& x, const Colouring& colouring) {
  const int k = x.num_hyperplanes();
  const MedianGraph& g = x.graph();
  const int n = g.num_vertices();
  if (static_cast<int>(colouring.size()) != k)
    throw Error(ErrorKind::InvalidInput, "colouring size does not match hyperplane count");
  std::map<int, std::vector<int>> classes;
  for (int h = 0; h < k; ++h) classes[colouring[h]].push_back(h);
  for (const auto& [c, walls] : classes)
    for (std::size_t i = 0; i < walls.size(); ++i)
      for (std::size_t j = i + 1; j < walls.size(); ++j)
        if (crosses(x.hyperplane(walls[i]), x.hyperplane(walls[j])))
          throw Error(ErrorKind::ClassNotLaminar, "hyperplanes " + std::to_string(walls[i]) + " and " +
                                                      std::to_string(walls[j]) + " cross but share colour " +
                                                      std::to_string(c));
  std::vector<TreeFactor> out;
  for (const auto& [c, walls] : classes) {
    TreeFactor f;
    f.colour = c;
    f.walls = walls;
    // 0-cubes in id order, so tree vertices are numbered by representative
    std::map<std::vector<bool>, int> index;
    f.vertex_map.assign(n, -1);
    for (int v = 0; v < n; ++v) {
      std::vector<bool> key;
      for (int h : walls) key.push_back(x.hyperplane(h).in_b[v]);
      auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(f.representative.size()));
      if (fresh) f.representative.push_back(v);
      f.vertex_map[v] = it->second;
    }
    std::set<int> in_class(walls.begin(), walls.end());
    std::vector<std::pair<int, int>> es;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!in_class.count(x.edge_class(e))) continue;
      const auto& [a, b] = g.edges()[e];
      es.emplace_back(f.vertex_map[a], f.vertex_map[b]);
    }
    const int t = static_cast<int>(f.representative.size());
    f.tree = Graph(t, std::move(es));
    auto d = f.tree.bfs(0);
    bool connected = std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
    if (!connected || f.tree.num_edges() != t - 1 || f.tree.num_edges() != static_cast<int>(walls.size()))
      throw Error(ErrorKind::FactorNotTree, "colour class " + std::to_string(c) + " does not give a tree");
    out.push_back(std::move(f));
  }
  return out;
}

IsometryReport verify_isometry(const Complex& x, const std::vector<TreeFactor>& factors) {
  const MedianGraph& g = x.graph();
  const int n = g.num_vertices();
  IsometryReport rep;
  // all-pairs distances of each tree on the vertices actually used
  std::vector<std::vector<std::vector<int>>> td;
  for (const auto& f : factors) {
    std::vector<std::vector<int>> rows;
    for (int t = 0; t < f.tree.num_vertices(); ++t) rows.push_back(f.tree.bfs(t));
    td.push_back(std::move(rows));
  }
  for (int u = 0; u < n; ++u) {
    auto du = g.bfs(u);
    for (int v = u + 1; v < n; ++v) {
      int sum = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        sum += td[i][factors[i].vertex_map[u]][factors[i].vertex_map[v]];
      if (sum != du[v]) {
        rep.ok = false;
        rep.counterexample = {u, v};
        rep.expected = du[v];
        rep.got = sum;
        return rep;
      }
    }
  }
  return rep;
}

TauBound tau_upper(const Complex& x, std::int64_t budget) {
  Graph cg = crossing_graph(x);
  TauBound out;
  try {
    out.value = exact_chromatic_number(cg, &out.colouring, budget);
    out.method = "exact";
    return out;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
  }
  out.colouring = greedy_colour(cg);
  out.value = palette_size(out.colouring);
  out.method = "greedy";
  if (dimension(x) <= 2) {
    // a proper contact colouring is proper on crossings as well
    Theorem1Result t = colour_contact_graph(x);
    if (t.palette < out.value) {
      out.colouring = t.colouring;
      out.value = t.palette;
      out.method = "theorem1";
    }
  }
  return out;
}

}  // namespace cubeforest

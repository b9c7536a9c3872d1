#include "cubeforest/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "cubeforest/error.hpp"
#include "detail.hpp"

namespace cubeforest {

MedianGraph grid(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw Error(ErrorKind::InvalidParams, "grid needs m+n >= 1");
  auto id = [&](int i, int j) { return i * (n + 1) + j; };
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i < m) es.emplace_back(id(i, j), id(i + 1, j));
      if (j < n) es.emplace_back(id(i, j), id(i, j + 1));
    }
  return MedianGraph((m + 1) * (n + 1), es);
}

MedianGraph path(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "path needs n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, i + 1);
  return MedianGraph(n + 1, es);
}

namespace {

// 1-skeleton of a union of unit cells given by their lower-left corners
MedianGraph from_cells(const std::set<std::pair<int, int>>& cells) {
  std::map<std::pair<int, int>, int> id;
  for (const auto& [x, y] : cells)
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy) id.emplace(std::make_pair(x + dx, y + dy), 0);
  int k = 0;
  for (auto& [p, v] : id) v = k++;
  std::set<std::pair<int, int>> es;
  for (const auto& [x, y] : cells) {
    int a = id[{x, y}], b = id[{x + 1, y}], c = id[{x + 1, y + 1}], d = id[{x, y + 1}];
    for (auto [u, v] : {std::pair{a, b}, {b, c}, {d, c}, {a, d}}) es.emplace(std::min(u, v), std::max(u, v));
  }
  return MedianGraph(k, std::vector<std::pair<int, int>>(es.begin(), es.end()));
}

}  // namespace

MedianGraph staircase(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "staircase needs k >= 1");
  std::set<std::pair<int, int>> cells;
  for (int i = 0; i < k; ++i) {
    cells.emplace(i, i);
    if (i + 1 < k) cells.emplace(i, i + 1);
  }
  return from_cells(cells);
}

MedianGraph square_tripod() {
  // star K_{1,3} times an edge: three squares sharing the spine 0-4
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= 3; ++i) {
    es.emplace_back(0, i);
    es.emplace_back(4, 4 + i);
    es.emplace_back(i, 4 + i);
  }
  es.emplace_back(0, 4);
  return MedianGraph(8, es);
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("CUBEFOREST_SEED");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  auto v = std::strtoull(s, &end, 10);
  if (end == s || *end) throw Error(ErrorKind::InvalidParams, "CUBEFOREST_SEED is not an integer");
  return v;
}

MedianGraph random_square_complex(std::uint64_t seed, int max_vertices) {
  if (max_vertices < 4) throw Error(ErrorKind::InvalidParams, "need room for one square");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> cells{{0, 0}};
  const int target = std::uniform_int_distribution<int>(4, 40)(rng);
  const int dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int attempt = 0; attempt < 40 * target && static_cast<int>(cells.size()) < target; ++attempt) {
    std::vector<std::pair<int, int>> list(cells.begin(), cells.end());
    auto base = list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)];
    const auto& d = dirs[std::uniform_int_distribution<int>(0, 3)(rng)];
    std::pair<int, int> cell{base.first + d[0], base.second + d[1]};
    if (cells.count(cell)) continue;
    cells.insert(cell);
    MedianGraph g = from_cells(cells);
    if (g.num_vertices() > max_vertices || !is_median_graph(g).ok) cells.erase(cell);
  }
  return from_cells(cells);
}

MedianGraph simplex_graph(const Graph& g, std::vector<std::vector<int>>* cliques_out) {
  // cliques in lexicographic order of sorted member lists, empty clique first
  std::vector<std::vector<int>> cliques{{}};
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto c = cliques[i];
    int start = c.empty() ? 0 : c.back() + 1;
    for (int v = start; v < g.num_vertices(); ++v) {
      bool ok = std::all_of(c.begin(), c.end(), [&](int u) { return g.adjacent(u, v); });
      if (!ok) continue;
      auto d = c;
      d.push_back(v);
      cliques.push_back(std::move(d));
    }
  }
  std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < cliques.size(); ++i) index[cliques[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t k = 0; k < cliques[i].size(); ++k) {
      auto smaller = cliques[i];
      smaller.erase(smaller.begin() + k);
      es.emplace_back(index.at(smaller), static_cast<int>(i));
    }
  MedianGraph out(static_cast<int>(cliques.size()), es, 0);
  // the crossing graph must reproduce g; hyperplane of vertex v is the class
  // of the edge {} -- {v}
  if (g.num_vertices() > 0) {
    Complex x(out);
    Graph xg = crossing_graph(x);
    std::vector<int> hyp_of(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
      hyp_of[v] = x.edge_class(out.edge_index(0, index.at({v})));
    bool same = xg.num_edges() == g.num_edges() && x.num_hyperplanes() == g.num_vertices();
    for (const auto& [u, v] : g.edges()) same = same && xg.adjacent(hyp_of[u], hyp_of[v]);
    if (!same) throw Error(ErrorKind::InternalInvariant, "simplex graph crossing graph mismatch");
  }
  if (cliques_out) *cliques_out = std::move(cliques);
  return out;
}

DualComplex dual_cube_complex(const Wallspace& w, std::size_t budget) {
  const int k = static_cast<int>(w.walls.size());
  const int n = w.num_points;
  if (n < 1) throw Error(ErrorKind::InvalidInput, "wallspace has no points");
  for (int i = 0; i < k; ++i) {
    const auto& wall = w.walls[i];
    if (static_cast<int>(wall.size()) != n)
      throw Error(ErrorKind::InvalidInput, "wall size does not match point count");
    if (wall.none() || wall.all())
      throw Error(ErrorKind::InvalidInput, "wall " + std::to_string(i) + " has an empty side");
    for (int j = 0; j < i; ++j)
      if (w.walls[j] == wall || w.walls[j] == ~wall)
        throw Error(ErrorKind::InvalidInput, "walls " + std::to_string(j) + " and " +
                                                 std::to_string(i) + " coincide");
  }
  std::vector<Bitset> label(n, Bitset(k));
  for (int i = 0; i < k; ++i)
    for (int p = 0; p < n; ++p)
      if (w.walls[i][p]) label[p].set(i);
  std::vector<std::vector<std::uint8_t>> pair_ok(k, std::vector<std::uint8_t>(k, 0));
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i)
        pair_ok[j][i] |= static_cast<std::uint8_t>(1u << (2 * label[p][i] + label[p][j]));
  bool exceeded = false;
  auto verts = detail::consistent_orientations(pair_ok, k, budget, &exceeded);
  if (exceeded)
    throw Error(ErrorKind::ExplosionBudget,
                "more than " + std::to_string(budget) + " consistent orientations");
  std::unordered_map<Bitset, int> index;
  index.reserve(verts.size() * 2);
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (int j = 0; j < k; ++j) {
      if (verts[i][j]) continue;  // each edge once, from its side-0 end
      Bitset f = verts[i];
      f.set(j);
      auto it = index.find(f);
      if (it != index.end()) es.emplace_back(static_cast<int>(i), it->second);
    }
  DualComplex out;
  out.graph = MedianGraph(static_cast<int>(verts.size()), es);
  out.orientation = std::move(verts);
  for (int p = 0; p < n; ++p) out.point_vertex.push_back(index.at(label[p]));
  return out;
}

}  // namespace cubeforest

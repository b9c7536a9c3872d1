#include "cubeforest/median_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cubeforest/error.hpp"
#include "detail.hpp"

namespace cubeforest {

MedianGraph::MedianGraph(int n, std::vector<std::pair<int, int>> edges,
                         std::optional<int> bp)
    : basepoint(bp), n_(n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::InvalidInput, "self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n, {});
  adj_edge_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    adj_edge_[v].resize(adj_[v].size());
    for (std::size_t i = 0; i < adj_[v].size(); ++i) {
      int w = adj_[v][i];
      auto key = std::make_pair(std::min(v, w), std::max(v, w));
      adj_edge_[v][i] =
          static_cast<int>(std::lower_bound(edges_.begin(), edges_.end(), key) - edges_.begin());
    }
  }
  if (basepoint && !has_vertex(*basepoint))
    throw Error(ErrorKind::UnknownVertex, "basepoint out of range");
}

int MedianGraph::edge_index(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return -1;
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return -1;
  return adj_edge_[u][it - a.begin()];
}

int MedianGraph::max_degree() const {
  int m = 0;
  for (const auto& a : adj_) m = std::max(m, static_cast<int>(a.size()));
  return m;
}

std::vector<int> MedianGraph::bfs(int src) const {
  if (!has_vertex(src)) throw Error(ErrorKind::UnknownVertex, std::to_string(src));
  std::vector<int> d(n_, -1);
  std::vector<int> queue{src};
  queue.reserve(n_);
  d[src] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (int w : adj_[u])
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
  }
  return d;
}

bool MedianGraph::connected() const {
  if (n_ == 0) return true;
  auto d = bfs(0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

DistanceMatrix::DistanceMatrix(const MedianGraph& g) : n_(g.num_vertices()) {
  d_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int s = 0; s < n_; ++s) {
    auto row = g.bfs(s);
    for (int t = 0; t < n_; ++t) {
      if (row[t] < 0) throw Error(ErrorKind::InvalidInput, "graph is disconnected");
      d_[static_cast<std::size_t>(s) * n_ + t] = static_cast<std::uint16_t>(row[t]);
    }
  }
}

int dist(const MedianGraph& g, int u, int v) {
  if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, std::to_string(v));
  return g.bfs(u)[v];
}

bool in_interval(const DistanceMatrix& d, int u, int v, int x) {
  return d(u, x) + d(x, v) == d(u, v);
}

int median(const DistanceMatrix& d, int u, int v, int w) {
  int found = -1, count = 0;
  for (int x = 0; x < d.size(); ++x) {
    if (in_interval(d, u, v, x) && in_interval(d, u, w, x) && in_interval(d, v, w, x)) {
      found = x;
      ++count;
    }
  }
  if (count != 1)
    throw Error(ErrorKind::NotMedian, "triple (" + std::to_string(u) + "," + std::to_string(v) +
                                          "," + std::to_string(w) + ") has " +
                                          std::to_string(count) + " medians");
  return found;
}

int median(const MedianGraph& g, int u, int v, int w) {
  for (int x : {u, v, w})
    if (!g.has_vertex(x)) throw Error(ErrorKind::UnknownVertex, std::to_string(x));
  auto du = g.bfs(u), dv = g.bfs(v), dw = g.bfs(w);
  int found = -1, count = 0;
  for (int x = 0; x < g.num_vertices(); ++x) {
    bool a = du[x] + dv[x] == du[v];
    bool b = du[x] + dw[x] == du[w];
    bool c = dv[x] + dw[x] == dv[w];
    if (a && b && c) {
      found = x;
      ++count;
    }
  }
  if (count != 1)
    throw Error(ErrorKind::NotMedian, "triple has " + std::to_string(count) + " medians");
  return found;
}

namespace detail {

std::vector<std::array<int, 4>> squares(const MedianGraph& g) {
  // a square u-a-c-b is reported once, from its smallest vertex u, with a<b
  std::vector<std::array<int, 4>> out;
  const int n = g.num_vertices();
  std::vector<int> mark(n, -1);
  for (int u = 0; u < n; ++u) {
    const auto& nu = g.neighbours(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      int a = nu[i];
      if (a < u) continue;
      for (int c : g.neighbours(a))
        if (c > u) mark[c] = a;
      for (std::size_t j = i + 1; j < nu.size(); ++j) {
        int b = nu[j];
        if (b < u) continue;
        for (int c : g.neighbours(b))
          if (c > u && mark[c] == a) out.push_back({u, a, c, b});
      }
      for (int c : g.neighbours(a))
        if (c > u) mark[c] = -1;
    }
  }
  return out;
}

std::vector<int> edge_classes(const MedianGraph& g, int* num_classes) {
  const int m = g.num_edges();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (const auto& s : squares(g)) {
    int ua = g.edge_index(s[0], s[1]), ub = g.edge_index(s[0], s[3]);
    int ac = g.edge_index(s[1], s[2]), bc = g.edge_index(s[3], s[2]);
    unite(ua, bc);
    unite(ub, ac);
  }
  std::vector<int> cls(m, -1), root_to_class(m, -1);
  int k = 0;
  for (int e = 0; e < m; ++e) {
    int r = find(e);
    if (root_to_class[r] < 0) root_to_class[r] = k++;
    cls[e] = root_to_class[r];
  }
  if (num_classes) *num_classes = k;
  return cls;
}

// Side labelling from deleting each class. Returns false (with a reason)
// if some class does not split the graph into exactly two sides.
bool split_by_classes(const MedianGraph& g, const std::vector<int>& cls, int k,
                      std::vector<Bitset>& in_b, std::string& reason) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> class_edges(k);
  for (int e = 0; e < g.num_edges(); ++e) class_edges[cls[e]].push_back(e);
  in_b.assign(k, Bitset(n));
  std::vector<int> comp(n);
  for (int c = 0; c < k; ++c) {
    std::fill(comp.begin(), comp.end(), -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(u)) {
          if (comp[w] >= 0 || cls[g.edge_index(u, w)] == c) continue;
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
      ++ncomp;
    }
    if (ncomp != 2) {
      reason = "class " + std::to_string(c) + " leaves " + std::to_string(ncomp) + " components";
      return false;
    }
    const auto& e0 = g.edges()[class_edges[c].front()];
    int a_comp = comp[e0.first];
    for (int e : class_edges[c]) {
      const auto& [u, v] = g.edges()[e];
      if (comp[u] == comp[v]) {
        reason = "edge of class " + std::to_string(c) + " does not cross its split";
        return false;
      }
    }
    for (int v = 0; v < n; ++v)
      if (comp[v] != a_comp) in_b[c].set(v);
  }
  return true;
}

std::vector<Bitset> consistent_orientations(const std::vector<std::vector<std::uint8_t>>& pair_ok,
                                            int k, std::size_t budget, bool* exceeded) {
  // pair_ok[i*k+j] bit (2a+b) set iff sides (a,b) on walls (i,j) may co-occur
  std::vector<Bitset> out;
  std::vector<int> choice(k, 0);
  *exceeded = false;
  // iterative DFS
  int depth = 0;
  std::vector<int> next(k + 1, 0);
  while (depth >= 0) {
    if (depth == k) {
      Bitset b(k);
      for (int i = 0; i < k; ++i)
        if (choice[i]) b.set(i);
      out.push_back(std::move(b));
      if (out.size() > budget) {
        *exceeded = true;
        return out;
      }
      --depth;
      continue;
    }
    if (next[depth] > 1) {
      next[depth] = 0;
      --depth;
      continue;
    }
    int b = next[depth]++;
    bool ok = true;
    const auto& row = pair_ok[depth];
    for (int i = 0; i < depth && ok; ++i) ok = (row[i] >> (2 * choice[i] + b)) & 1;
    if (!ok) continue;
    choice[depth] = b;
    ++depth;
  }
  return out;
}

}  // namespace detail

MedianCheck median_by_triples(const MedianGraph& g) {
  MedianCheck res;
  const int n = g.num_vertices();
  if (!g.connected()) {
    res.ok = false;
    res.reason = "disconnected";
    return res;
  }
  if (n <= 2) return res;
  DistanceMatrix d(g);
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> iv(static_cast<std::size_t>(n) * n * words, 0);
  auto row = [&](int u, int v) { return &iv[(static_cast<std::size_t>(u) * n + v) * words]; };
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      auto* r = row(u, v);
      for (int x = 0; x < n; ++x)
        if (d(u, x) + d(x, v) == d(u, v)) r[x >> 6] |= std::uint64_t{1} << (x & 63);
      if (u != v) std::copy(r, r + words, row(v, u));
    }
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      const auto* uv = row(u, v);
      for (int w = v; w < n; ++w) {
        const auto* uw = row(u, w);
        const auto* vw = row(v, w);
        int count = 0;
        for (int i = 0; i < words && count < 2; ++i)
          count += __builtin_popcountll(uv[i] & uw[i] & vw[i]);
        if (count != 1) {
          res.ok = false;
          res.triple = std::array<int, 3>{u, v, w};
          res.reason = count == 0 ? "triple has no median" : "triple has several medians";
          return res;
        }
      }
    }
  return res;
}

MedianCheck median_by_labelling(const MedianGraph& g) {
  MedianCheck res;
  const int n = g.num_vertices();
  auto fail = [&](std::string why) {
    res.ok = false;
    res.reason = std::move(why);
    return res;
  };
  if (!g.connected()) return fail("disconnected");
  if (n <= 1) return res;
  int k = 0;
  auto cls = detail::edge_classes(g, &k);
  std::vector<Bitset> in_b;
  std::string why;
  if (!detail::split_by_classes(g, cls, k, in_b, why)) return fail(why);

  // labels must be injective
  std::vector<Bitset> label(n, Bitset(k));
  for (int c = 0; c < k; ++c)
    for (int v = 0; v < n; ++v)
      if (in_b[c][v]) label[v].set(c);
  std::unordered_map<Bitset, int> index;
  index.reserve(n * 2);
  for (int v = 0; v < n; ++v)
    if (!index.emplace(label[v], v).second) return fail("two vertices share a labelling");

  // every hypercube edge inside the label set must be a graph edge
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < k; ++c) {
      Bitset f = label[v];
      f.flip(c);
      auto it = index.find(f);
      if (it != index.end() && g.edge_index(v, it->second) < 0)
        return fail("labelling is not an induced subgraph of the cube");
    }

  // the label set must equal its closure under pairwise consistency
  std::vector<std::vector<std::uint8_t>> pair_ok(k, std::vector<std::uint8_t>(k, 0));
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < k; ++j) {
      int b = label[v][j];
      for (int i = 0; i < j; ++i) pair_ok[j][i] |= static_cast<std::uint8_t>(1u << (2 * label[v][i] + b));
    }
  bool exceeded = false;
  auto all = detail::consistent_orientations(pair_ok, k, static_cast<std::size_t>(n), &exceeded);
  if (exceeded || static_cast<int>(all.size()) != n)
    return fail("vertex set is not closed under medians");
  return res;
}

MedianCheck is_median_graph(const MedianGraph& g) {
  if (g.num_vertices() <= 600) return median_by_triples(g);
  return median_by_labelling(g);
}

bool is_convex(const MedianGraph& g, const VertexSet& s) {
  if (s.empty()) return true;
  const int n = g.num_vertices();
  std::vector<char> in(n, 0);
  for (int v : s) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, std::to_string(v));
    in[v] = 1;
  }
  for (int u : s) {
    auto du = g.bfs(u);
    for (int v : s)
      for (int x : g.neighbours(v))
        if (du[x] == du[v] - 1 && !in[x]) return false;
  }
  return true;
}

int gate(const MedianGraph& g, const VertexSet& s, int v) {
  if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty set has no gate");
  auto dv = g.bfs(v);
  int found = -1, count = 0;
  for (int c : s) {
    auto dc = g.bfs(c);
    bool ok = std::all_of(s.begin(), s.end(), [&](int y) { return dv[y] == dv[c] + dc[y]; });
    if (ok) {
      found = c;
      ++count;
    }
  }
  if (count != 1)
    throw Error(ErrorKind::NotGated, "vertex " + std::to_string(v) + " has " +
                                         std::to_string(count) + " gate candidates");
  return found;
}

namespace {

bool locally_convex(const MedianGraph& g, const Bitset& in, bool side) {
  // every 2-path with both ends on one side keeps its middle on that side
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (in[u] != side) continue;
    for (int x : g.neighbours(u)) {
      if (in[x] == side) continue;
      for (int v : g.neighbours(x))
        if (v != u && in[v] == side) return false;
    }
  }
  return true;
}

// exact interval test with one BFS row per vertex, shared by all classes
bool convex_by_rows(const MedianGraph& g, const std::vector<std::vector<int>>& rows, const Bitset& in,
                    bool side) {
  const int n = g.num_vertices();
  for (int u = 0; u < n; ++u) {
    if (in[u] != side) continue;
    const auto& du = rows[u];
    for (int v = 0; v < n; ++v) {
      if (in[v] != side) continue;
      for (int x : g.neighbours(v))
        if (du[x] == du[v] - 1 && in[x] != side) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Hyperplane> theta_classes(const MedianGraph& g) {
  int k = 0;
  auto cls = detail::edge_classes(g, &k);
  std::vector<Bitset> in_b;
  std::string why;
  if (!g.connected()) throw Error(ErrorKind::InvalidInput, "graph is disconnected");
  if (!detail::split_by_classes(g, cls, k, in_b, why))
    throw Error(ErrorKind::InconsistentSplit, why);
  const int n = g.num_vertices();
  std::vector<std::vector<int>> rows;
  if (n <= 300)
    for (int v = 0; v < n; ++v) rows.push_back(g.bfs(v));
  std::vector<Hyperplane> hs(k);
  for (int c = 0; c < k; ++c) {
    hs[c].id = c;
    hs[c].in_b = in_b[c];
    hs[c].carrier_bits = Bitset(n);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    auto& h = hs[cls[e]];
    h.edges.push_back(e);
    h.carrier_bits.set(g.edges()[e].first);
    h.carrier_bits.set(g.edges()[e].second);
  }
  for (auto& h : hs) {
    for (int v = 0; v < n; ++v) {
      (h.in_b[v] ? h.half_b : h.half_a).push_back(v);
      if (h.carrier_bits[v]) h.carrier.push_back(v);
    }
    bool convex = n <= 300 ? convex_by_rows(g, rows, h.in_b, false) && convex_by_rows(g, rows, h.in_b, true)
                            : locally_convex(g, h.in_b, false) && locally_convex(g, h.in_b, true);
    if (!convex)
      throw Error(ErrorKind::InconsistentSplit,
                  "halfspace of class " + std::to_string(h.id) + " is not convex");
    // Djokovic-Winkler: two edges of one class are never "parallel in distance"
    // in the wrong way; checked on a few pairs per class
    const auto& e0 = g.edges()[h.edges.front()];
    auto du = rows.empty() ? g.bfs(e0.first) : rows[e0.first];
    auto dv = rows.empty() ? g.bfs(e0.second) : rows[e0.second];
    std::size_t step = std::max<std::size_t>(1, h.edges.size() / 8);
    for (std::size_t i = 0; i < h.edges.size(); i += step) {
      auto [x, y] = g.edges()[h.edges[i]];
      if (du[x] + dv[y] == du[y] + dv[x])
        throw Error(ErrorKind::InconsistentSplit, "Djokovic-Winkler check failed in class " +
                                                      std::to_string(h.id));
    }
  }
  return hs;
}

int out_degree(const MedianGraph& g, const std::vector<int>& dist_from_base, int v) {
  int c = 0;
  for (int w : g.neighbours(v))
    if (dist_from_base[w] > dist_from_base[v]) ++c;
  return c;
}

}  // namespace cubeforest

#include "cubeforest/graph.hpp"

#include <algorithm>
#include <set>

#include "cubeforest/error.hpp"

namespace cubeforest {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::InvalidInput, "self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int m = 0;
  for (const auto& a : adj_) m = std::max(m, static_cast<int>(a.size()));
  return m;
}

std::vector<int> Graph::bfs(int src) const {
  std::vector<int> d(n_, -1);
  std::vector<int> q{src};
  d[src] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (int w : adj_[q[h]])
      if (d[w] < 0) {
        d[w] = d[q[h]] + 1;
        q.push_back(w);
      }
  return d;
}

Graph Graph::induced(const std::vector<int>& vs) const {
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (const auto& [u, v] : edges_)
    if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  return Graph(static_cast<int>(vs.size()), std::move(es));
}

int palette_size(const Colouring& c) {
  return static_cast<int>(std::set<int>(c.begin(), c.end()).size());
}

std::optional<std::pair<int, int>> improper_edge(const Graph& g, const Colouring& c) {
  if (static_cast<int>(c.size()) != g.num_vertices())
    throw Error(ErrorKind::InvalidInput, "colouring size does not match graph");
  for (const auto& e : g.edges())
    if (c[e.first] == c[e.second]) return e;
  return std::nullopt;
}

bool verify_colouring(const Graph& g, const Colouring& c) { return !improper_edge(g, c); }

Colouring greedy_colour(const Graph& g, const std::vector<int>& order) {
  const int n = g.num_vertices();
  std::vector<int> ord = order;
  if (ord.empty()) {
    ord.resize(n);
    for (int i = 0; i < n; ++i) ord[i] = i;
  }
  Colouring c(n, -1);
  std::vector<int> seen(n + 1, -1);
  for (int v : ord) {
    for (int w : g.neighbours(v))
      if (c[w] >= 0) seen[c[w]] = v;
    int k = 0;
    while (seen[k] == v) ++k;
    c[v] = k;
  }
  return c;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  std::vector<int> best, cur;

  void expand(std::vector<int> cand) {
    if (cand.empty()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    // greedy colour classes give an upper bound for each prefix
    std::vector<int> order, bound;
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool ok = std::none_of(classes[k].begin(), classes[k].end(),
                               [&](int w) { return g.adjacent(v, w); });
        if (ok) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (int v : classes[k]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(k) + 1);
      }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (cur.size() + bound[i] <= best.size()) return;
      int v = order[i];
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (g.adjacent(v, order[j])) next.push_back(order[j]);
      cur.push_back(v);
      expand(std::move(next));
      cur.pop_back();
    }
  }
};

struct ColourSearch {
  const Graph& g;
  std::int64_t budget;
  std::int64_t nodes = 0;
  int best = 0;
  int lower = 0;
  Colouring col{}, best_col{};
  std::vector<std::vector<int>> nb_count{};  // nb_count[v][c]: neighbours of v with colour c

  void assign(int v, int c, int delta) {
    col[v] = delta > 0 ? c : -1;
    for (int w : g.neighbours(v)) nb_count[w][c] += delta;
  }

  void search(int coloured, int used) {
    if (++nodes > budget) throw Error(ErrorKind::BudgetExceeded, "chromatic number search budget");
    if (used >= best) return;
    const int n = g.num_vertices();
    if (coloured == n) {
      best = used;
      best_col = col;
      return;
    }
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (col[v] >= 0) continue;
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += nb_count[v][c] > 0;
      int deg = static_cast<int>(g.neighbours(v).size());
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    for (int c = 0; c <= used; ++c) {
      if (c < used && nb_count[pick][c] > 0) continue;
      if (c == used && used + 1 >= best) break;
      assign(pick, c, +1);
      search(coloured + 1, std::max(used, c + 1));
      assign(pick, c, -1);
      if (best <= lower) return;
    }
  }
};

}  // namespace

int max_clique(const Graph& g, std::vector<int>* witness) {
  CliqueSearch s{g, {}, {}};
  std::vector<int> all(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) all[i] = i;
  // high degree first tends to find large cliques early
  std::stable_sort(all.begin(), all.end(), [&](int a, int b) {
    return g.neighbours(a).size() > g.neighbours(b).size();
  });
  s.expand(all);
  std::sort(s.best.begin(), s.best.end());
  if (witness) *witness = s.best;
  return static_cast<int>(s.best.size());
}

int exact_chromatic_number(const Graph& g, Colouring* witness, std::int64_t budget) {
  const int n = g.num_vertices();
  if (n == 0) {
    if (witness) witness->clear();
    return 0;
  }
  Colouring greedy = greedy_colour(g);
  ColourSearch s{g, budget, 0, 0, 0, {}, {}, {}};
  s.best = palette_size(greedy);
  s.best_col = greedy;
  s.lower = max_clique(g);
  s.col.assign(n, -1);
  s.nb_count.assign(n, std::vector<int>(n + 1, 0));
  if (s.best > s.lower) s.search(0, 0);
  if (witness) *witness = s.best_col;
  return s.best;
}

}  // namespace cubeforest

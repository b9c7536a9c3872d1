#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "cubeforest/constructions.hpp"
#include "cubeforest/error.hpp"

namespace cubeforest {

bool boxes_intersect(const Box3& a, const Box3& b) {
  for (int d = 0; d < 3; ++d)
    if (a.iv[d][0] > b.iv[d][1] || b.iv[d][0] > a.iv[d][1]) return false;
  return true;
}

Graph BoxFamily::intersection_graph() const {
  const int n = static_cast<int>(boxes.size());
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (boxes_intersect(boxes[i], boxes[j])) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph burling_graph(int k, std::vector<std::vector<int>>* probes_out) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "burling graph needs k >= 1");
  int n = 1;
  std::vector<std::pair<int, int>> es;
  std::vector<std::vector<int>> probes{{0}};
  for (int step = 1; step < k; ++step) {
    const int base_n = n;
    const auto base_es = es;
    const auto base_probes = probes;
    std::vector<std::vector<int>> next;
    for (const auto& p : base_probes) {
      const int off = n;
      n += base_n;
      for (const auto& [a, b] : base_es) es.emplace_back(a + off, b + off);
      for (const auto& q : base_probes) {
        std::vector<int> qc;
        for (int x : q) qc.push_back(x + off);
        const int v = n++;
        for (int x : p) es.emplace_back(x, v);
        auto a = p;
        a.insert(a.end(), qc.begin(), qc.end());
        std::sort(a.begin(), a.end());
        auto b = qc;
        b.push_back(v);
        std::sort(b.begin(), b.end());
        next.push_back(std::move(a));
        next.push_back(std::move(b));
      }
    }
    probes = std::move(next);
  }
  if (probes_out) *probes_out = probes;
  return Graph(n, std::move(es));
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Difference constraints x_b - x_a <= M[a][b], one closed matrix per axis.
// Variable 2u is the lower end of box u, 2u+1 the upper end.
struct BoxSearch {
  int n = 0;
  int vars = 0;
  std::vector<std::vector<int>> m;  // per axis, row-major
  std::vector<std::pair<int, int>> non_edges;
  std::vector<std::tuple<int, int, int>> trail;  // (axis, index, old value)
  std::int64_t nodes = 0;
  std::int64_t budget = 0;

  int& at(int d, int a, int b) { return m[d][static_cast<std::size_t>(a) * vars + b]; }

  bool add(int d, int a, int b, int w) {
    if (at(d, b, a) < kInf && at(d, b, a) + w < 0) return false;
    if (at(d, a, b) <= w) return true;
    for (int i = 0; i < vars; ++i) {
      const int ia = at(d, i, a);
      if (ia >= kInf) continue;
      for (int j = 0; j < vars; ++j) {
        const int bj = at(d, b, j);
        if (bj >= kInf) continue;
        const int v = ia + w + bj;
        int& cell = at(d, i, j);
        if (v < cell) {
          trail.emplace_back(d, i * vars + j, cell);
          cell = v;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      auto [d, idx, old] = trail.back();
      m[d][idx] = old;
      trail.pop_back();
    }
  }

  bool separated(int u, int v) {
    for (int d = 0; d < 3; ++d)
      if (at(d, 2 * v, 2 * u + 1) < 0 || at(d, 2 * u, 2 * v + 1) < 0) return true;
    return false;
  }

  bool search(std::size_t i) {
    while (i < non_edges.size() && separated(non_edges[i].first, non_edges[i].second)) ++i;
    if (i == non_edges.size()) return true;
    if (++nodes > budget) throw Error(ErrorKind::BudgetExceeded, "box realisation search budget");
    const auto [u, v] = non_edges[i];
    for (int d = 0; d < 3; ++d)
      for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        const auto mark = trail.size();
        // upper end of a strictly below lower end of b
        if (add(d, 2 * b, 2 * a + 1, -1) && search(i + 1)) return true;
        undo(mark);
      }
    return false;
  }
};

}  // namespace

BoxFamily realise_boxes(const Graph& g, std::int64_t budget) {
  BoxSearch s;
  s.n = g.num_vertices();
  s.vars = 2 * s.n;
  s.budget = budget;
  s.m.assign(3, std::vector<int>(static_cast<std::size_t>(s.vars) * s.vars, kInf));
  for (int d = 0; d < 3; ++d) {
    for (int i = 0; i < s.vars; ++i) s.at(d, i, i) = 0;
    for (int u = 0; u < s.n; ++u) s.add(d, 2 * u + 1, 2 * u, -1);
    for (const auto& [u, v] : g.edges()) {
      s.add(d, 2 * v + 1, 2 * u, 0);
      s.add(d, 2 * u + 1, 2 * v, 0);
    }
  }
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (!g.adjacent(u, v)) s.non_edges.emplace_back(u, v);
  if (!s.search(0)) throw Error(ErrorKind::InvalidInput, "graph has no box representation in R^3");
  s.trail.clear();

  // potentials from a virtual source joined to every variable at weight 0
  BoxFamily out;
  out.boxes.resize(s.n);
  for (int d = 0; d < 3; ++d) {
    std::vector<int> x(s.vars, 0);
    for (int j = 0; j < s.vars; ++j)
      for (int i = 0; i < s.vars; ++i) x[j] = std::min(x[j], s.at(d, i, j));
    const int lo = s.vars ? *std::min_element(x.begin(), x.end()) : 0;
    for (int u = 0; u < s.n; ++u) out.boxes[u].iv[d] = {x[2 * u] - lo + 1, x[2 * u + 1] - lo + 1};
  }
  Graph got = out.intersection_graph();
  if (got.edges() != g.edges())
    throw Error(ErrorKind::InternalInvariant, "box realisation does not reproduce the graph");
  return out;
}

BoxFamily burling(int n, std::int64_t budget) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "burling needs n >= 1");
  // S_4 already has 181 boxes; the exact certificates stop well before that
  if (n > 2) throw Error(ErrorKind::BudgetExceeded, "burling(" + std::to_string(n) + ") exceeds the certification budget");
  Graph g = burling_graph(n + 1);
  BoxFamily b = realise_boxes(g, budget);
  Graph ig = b.intersection_graph();
  const int omega = max_clique(ig);
  const int chi = exact_chromatic_number(ig, nullptr, budget);
  if (omega > 2 || chi <= n)
    throw Error(ErrorKind::InternalInvariant, "burling family fails its certificate");
  return b;
}

MedianGraph box_complex(const Box3& b0, const std::array<std::vector<int>, 3>& planes) {
  std::array<std::vector<int>, 3> coords;
  for (int d = 0; d < 3; ++d) {
    const int lo = b0.iv[d][0], hi = b0.iv[d][1];
    if (lo > hi) throw Error(ErrorKind::InvalidParams, "box with reversed interval");
    std::set<int> c{lo, hi};
    for (int p : planes[d]) {
      if (p <= lo || p >= hi) throw Error(ErrorKind::InvalidParams, "plane misses the interior of the box");
      c.insert(p);
    }
    coords[d].assign(c.begin(), c.end());
  }
  const int nx = static_cast<int>(coords[0].size()), ny = static_cast<int>(coords[1].size()),
            nz = static_cast<int>(coords[2].size());
  auto id = [&](int i, int j, int k) { return (i * ny + j) * nz + k; };
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nz; ++k) {
        if (i + 1 < nx) es.emplace_back(id(i, j, k), id(i + 1, j, k));
        if (j + 1 < ny) es.emplace_back(id(i, j, k), id(i, j + 1, k));
        if (k + 1 < nz) es.emplace_back(id(i, j, k), id(i, j, k + 1));
      }
  return MedianGraph(nx * ny * nz, std::move(es), 0);
}

LiftedComplex lifted_complex(const BoxFamily& family) {
  const int nb = static_cast<int>(family.boxes.size());
  // grid coordinates: every box face, plus a margin on both sides
  std::array<std::vector<int>, 3> coords;
  for (int d = 0; d < 3; ++d) {
    std::set<int> c;
    for (const auto& b : family.boxes) {
      if (b.iv[d][0] >= b.iv[d][1]) throw Error(ErrorKind::InvalidInput, "box interval must have lo < hi");
      c.insert(b.iv[d][0]);
      c.insert(b.iv[d][1]);
    }
    if (c.empty()) c = {1};
    c.insert(*c.begin() - 1);
    c.insert(*c.rbegin() + 1);
    coords[d].assign(c.begin(), c.end());
  }
  const int nx = static_cast<int>(coords[0].size()), ny = static_cast<int>(coords[1].size()),
            nz = static_cast<int>(coords[2].size());
  auto id = [&](int i, int j, int k) { return (i * ny + j) * nz + k; };
  const int grid_n = nx * ny * nz;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < nz; ++k) {
        if (i + 1 < nx) es.emplace_back(id(i, j, k), id(i + 1, j, k));
        if (j + 1 < ny) es.emplace_back(id(i, j, k), id(i, j + 1, k));
        if (k + 1 < nz) es.emplace_back(id(i, j, k), id(i, j, k + 1));
      }
  int n = grid_n;
  for (const auto& b : family.boxes) {
    std::array<std::array<int, 2>, 3> r;
    for (int d = 0; d < 3; ++d)
      for (int e = 0; e < 2; ++e)
        r[d][e] = static_cast<int>(std::lower_bound(coords[d].begin(), coords[d].end(), b.iv[d][e]) -
                                   coords[d].begin());
    const int sx = r[0][1] - r[0][0] + 1, sy = r[1][1] - r[1][0] + 1, sz = r[2][1] - r[2][0] + 1;
    auto lid = [&](int i, int j, int k) { return n + (i * sy + j) * sz + k; };
    for (int i = 0; i < sx; ++i)
      for (int j = 0; j < sy; ++j)
        for (int k = 0; k < sz; ++k) {
          es.emplace_back(id(r[0][0] + i, r[1][0] + j, r[2][0] + k), lid(i, j, k));
          if (i + 1 < sx) es.emplace_back(lid(i, j, k), lid(i + 1, j, k));
          if (j + 1 < sy) es.emplace_back(lid(i, j, k), lid(i, j + 1, k));
          if (k + 1 < sz) es.emplace_back(lid(i, j, k), lid(i, j, k + 1));
        }
    n += sx * sy * sz;
  }
  LiftedComplex out;
  out.graph = MedianGraph(n, std::move(es), 0);
  out.alpha = 0;
  out.beta = grid_n - 1;
  out.num_grid_vertices = grid_n;
  auto check = is_median_graph(out.graph);
  if (!check.ok) throw Error(ErrorKind::NotMedianAfterLift, check.reason);

  const int omega = nb ? max_clique(family.intersection_graph()) : 0;
  if (out.graph.max_degree() > omega + 6)
    throw Error(ErrorKind::PostconditionFailed, "contact clique exceeds omega + 6");
  Complex x(out.graph);
  const int pointed = max_clique(pointed_contact_graph(x, out.alpha).graph);
  if (pointed != omega + 3)
    throw Error(ErrorKind::PostconditionFailed, "pointed contact clique is " + std::to_string(pointed) +
                                                   ", expected " + std::to_string(omega + 3));
  return out;
}

}  // namespace cubeforest

#include <algorithm>
#include <set>
#include <unordered_map>

#include "cubeforest/constructions.hpp"
#include "cubeforest/error.hpp"

namespace cubeforest {

namespace {

// BFS in both graphs from every source; beyond this size a fixed sample of
// sources is used instead
constexpr int kAllPairsLimit = 2500;
constexpr int kSampledSources = 96;

void check_isometry(const MedianGraph& x, const MedianGraph& r, const std::vector<int>& image) {
  const int n = x.num_vertices();
  std::vector<int> sources;
  if (n <= kAllPairsLimit) {
    for (int v = 0; v < n; ++v) sources.push_back(v);
  } else {
    const int step = std::max(1, n / kSampledSources);
    for (int v = 0; v < n; v += step) sources.push_back(v);
    sources.push_back(n - 1);
  }
  for (int s : sources) {
    auto dx = x.bfs(s);
    auto dr = r.bfs(image[s]);
    for (int v = 0; v < n; ++v)
      if (dx[v] != dr[image[v]])
        throw Error(ErrorKind::PostconditionFailed,
                    "distance " + std::to_string(s) + "-" + std::to_string(v) + " not preserved");
  }
}

}  // namespace

Recubulation recubulate(const Complex& x, const Graph& gamma_alpha, std::size_t budget) {
  const MedianGraph& g = x.graph();
  const int k = x.num_hyperplanes();
  const int n = g.num_vertices();
  if (gamma_alpha.num_vertices() != k)
    throw Error(ErrorKind::SandwichViolated, "graph is not on the hyperplanes of the complex");
  Graph crossing = crossing_graph(x);
  for (const auto& [a, b] : crossing.edges())
    if (!gamma_alpha.adjacent(a, b))
      throw Error(ErrorKind::SandwichViolated, "crossing pair " + std::to_string(a) + "," +
                                                   std::to_string(b) + " missing");
  for (const auto& [a, b] : gamma_alpha.edges())
    if (!contacts(x.hyperplane(a), x.hyperplane(b)))
      throw Error(ErrorKind::SandwichViolated, "pair " + std::to_string(a) + "," + std::to_string(b) +
                                                   " does not contact");

  Wallspace w;
  std::vector<Bitset> label(n, Bitset(k));
  for (int h = 0; h < k; ++h)
    for (int v = 0; v < n; ++v)
      if (x.hyperplane(h).in_b[v]) label[v].set(h);
  // one new point per corner realising an osculation kept in gamma_alpha
  std::set<Bitset> extra;
  for (int v = 0; v < n; ++v) {
    auto cls = x.classes_at(v);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        const int a = cls[i], b = cls[j];
        if (!gamma_alpha.adjacent(a, b) || crossing.adjacent(a, b)) continue;
        Bitset p = label[v];
        p.flip(a);
        p.flip(b);
        extra.insert(p);
      }
  }
  std::vector<Bitset> points = label;
  points.insert(points.end(), extra.begin(), extra.end());
  w.num_points = static_cast<int>(points.size());
  w.walls.assign(k, Bitset(w.num_points));
  for (int p = 0; p < w.num_points; ++p)
    for (int h = 0; h < k; ++h)
      if (points[p][h]) w.walls[h].set(p);

  DualComplex dual = dual_cube_complex(w, budget);
  Recubulation out;
  out.graph = dual.graph;
  out.image.assign(dual.point_vertex.begin(), dual.point_vertex.begin() + n);
  out.added_points = static_cast<int>(extra.size());
  if (g.basepoint) out.graph.basepoint = out.image[*g.basepoint];

  // hyperplanes of R against walls
  Complex r(out.graph);
  if (r.num_hyperplanes() != k)
    throw Error(ErrorKind::PostconditionFailed, "hyperplane count changed");
  out.hyperplane_of.assign(k, -1);
  for (int h = 0; h < k; ++h) {
    const auto [a, b] = out.graph.edges()[r.hyperplane(h).edges.front()];
    auto diff = dual.orientation[a] ^ dual.orientation[b];
    out.hyperplane_of[h] = static_cast<int>(diff.find_first());
  }
  std::vector<int> inv(k, -1);
  for (int h = 0; h < k; ++h) inv[out.hyperplane_of[h]] = h;
  if (std::count(inv.begin(), inv.end(), -1))
    throw Error(ErrorKind::PostconditionFailed, "hyperplanes do not biject with walls");
  Graph rc = crossing_graph(r);
  bool same = rc.num_edges() == gamma_alpha.num_edges();
  for (const auto& [a, b] : gamma_alpha.edges()) same = same && rc.adjacent(inv[a], inv[b]);
  if (!same) throw Error(ErrorKind::PostconditionFailed, "crossing graph differs from the target graph");
  check_isometry(g, out.graph, out.image);
  out.dimension = dimension(r);
  if (out.dimension > max_clique(gamma_alpha))
    throw Error(ErrorKind::PostconditionFailed, "dimension exceeds the clique number");
  const long long delta = g.max_degree();
  if (out.graph.max_degree() > delta * delta + delta)
    throw Error(ErrorKind::PostconditionFailed, "degree exceeds delta^2 + delta");
  return out;
}

Theorem2Instance theorem2_family(int n, std::size_t budget) {
  Theorem2Instance t;
  BoxFamily b = burling(n);
  t.lifted = lifted_complex(b);
  Complex x(t.lifted.graph);
  Graph ga = pointed_contact_graph(x, t.lifted.alpha).graph;
  t.rec = recubulate(x, ga, budget);
  t.alpha = t.rec.image[t.lifted.alpha];
  t.beta = t.rec.image[t.lifted.beta];
  if (t.rec.dimension > 5) throw Error(ErrorKind::PostconditionFailed, "dimension exceeds 5");
  if (t.rec.graph.max_degree() > 72) throw Error(ErrorKind::PostconditionFailed, "contact clique exceeds 72");
  // the crossing graph of the result is ga under the hyperplane bijection
  if (exact_chromatic_number(ga, nullptr) <= n)
    throw Error(ErrorKind::PostconditionFailed, "crossing graph is not " + std::to_string(n + 1) + "-chromatic");
  return t;
}

MedianGraph chain(int k, std::vector<int>* block_of_vertex) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "chain needs k >= 1");
  std::vector<std::pair<int, int>> es;
  std::vector<int> block;
  int n = 0;
  int prev_beta = -1;
  int alpha0 = 0;
  for (int i = 1; i <= k; ++i) {
    Theorem2Instance t = theorem2_family(i);
    const MedianGraph& g = t.rec.graph;
    std::vector<int> id(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (v == t.alpha && prev_beta >= 0) {
        id[v] = prev_beta;
        continue;
      }
      id[v] = n++;
      block.push_back(i - 1);
    }
    if (i == 1) alpha0 = id[t.alpha];
    for (const auto& [a, b] : g.edges()) es.emplace_back(id[a], id[b]);
    prev_beta = id[t.beta];
  }
  if (block_of_vertex) *block_of_vertex = block;
  return MedianGraph(n, std::move(es), alpha0);
}

}  // namespace cubeforest

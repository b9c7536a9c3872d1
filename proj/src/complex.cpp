#include "cubeforest/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cubeforest/error.hpp"

namespace cubeforest {

Complex::Complex(MedianGraph g) : g_(std::move(g)) {
  hyps_ = theta_classes(g_);
  edge_class_.assign(g_.num_edges(), -1);
  for (const auto& h : hyps_)
    for (int e : h.edges) edge_class_[e] = h.id;
  inc_.assign(g_.num_vertices(), {});
  for (int e = 0; e < g_.num_edges(); ++e) {
    const auto& [u, v] = g_.edges()[e];
    inc_[u].emplace_back(edge_class_[e], e);
    inc_[v].emplace_back(edge_class_[e], e);
  }
  for (auto& l : inc_) std::sort(l.begin(), l.end());
}

int Complex::edge_at(int v, int h) const {
  const auto& l = inc_[v];
  auto it = std::lower_bound(l.begin(), l.end(), std::make_pair(h, -1));
  if (it == l.end() || it->first != h) return -1;
  return it->second;
}

int Complex::across(int v, int h) const {
  int e = edge_at(v, h);
  if (e < 0) return -1;
  const auto& [a, b] = g_.edges()[e];
  return a == v ? b : a;
}

std::vector<int> Complex::classes_at(int v) const {
  std::vector<int> out;
  for (const auto& [c, e] : inc_[v]) out.push_back(c);
  return out;
}

bool crosses(const Hyperplane& a, const Hyperplane& b) {
  if (a.id == b.id) return false;
  const auto& x = a.in_b;
  const auto& y = b.in_b;
  return x.intersects(y) && !x.is_subset_of(y) && !y.is_subset_of(x) && (x | y).count() < x.size();
}

bool contacts(const Hyperplane& a, const Hyperplane& b) {
  return a.id != b.id && a.carrier_bits.intersects(b.carrier_bits);
}

bool osculates(const Hyperplane& a, const Hyperplane& b) { return contacts(a, b) && !crosses(a, b); }

ContactKind ContactGraph::kind(int a, int b) const {
  auto key = std::make_pair(std::min(a, b), std::max(a, b));
  const auto& es = graph.edges();
  auto it = std::lower_bound(es.begin(), es.end(), key);
  if (it == es.end() || *it != key) throw Error(ErrorKind::NotInContact, "no contact edge");
  return kinds[it - es.begin()];
}

Graph ContactGraph::crossing_part() const {
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < kinds.size(); ++i)
    if (kinds[i] == ContactKind::Cross) es.push_back(graph.edges()[i]);
  return Graph(graph.num_vertices(), es);
}

namespace {

std::set<std::pair<int, int>> contact_pairs(const Complex& x) {
  std::set<std::pair<int, int>> pairs;
  for (int v = 0; v < x.graph().num_vertices(); ++v) {
    auto cs = x.classes_at(v);
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) pairs.emplace(cs[i], cs[j]);
  }
  return pairs;
}

ContactGraph labelled(const Complex& x, const std::set<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> es(pairs.begin(), pairs.end());
  ContactGraph cg{Graph(x.num_hyperplanes(), es), {}};
  for (const auto& [a, b] : cg.graph.edges())
    cg.kinds.push_back(crosses(x.hyperplane(a), x.hyperplane(b)) ? ContactKind::Cross
                                                                  : ContactKind::Osculate);
  return cg;
}

}  // namespace

ContactGraph contact_graph(const Complex& x, bool verify_clique) {
  ContactGraph cg = labelled(x, contact_pairs(x));
  if (verify_clique && x.num_hyperplanes() > 0) {
    int w = max_clique(cg.graph);
    if (w != x.graph().max_degree())
      throw Error(ErrorKind::CliqueDegreeMismatch,
                  "clique number " + std::to_string(w) + " but maximum degree " +
                      std::to_string(x.graph().max_degree()));
  }
  return cg;
}

Graph crossing_graph(const Complex& x) { return contact_graph(x, false).crossing_part(); }

ContactGraph pointed_contact_graph(const Complex& x, int basepoint) {
  const auto& g = x.graph();
  if (!g.has_vertex(basepoint)) throw Error(ErrorKind::UnknownVertex, std::to_string(basepoint));
  ContactGraph full = contact_graph(x, false);
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < full.kinds.size(); ++i)
    if (full.kinds[i] == ContactKind::Cross) pairs.insert(full.graph.edges()[i]);
  for (int v = 0; v < g.num_vertices(); ++v) {
    // classes whose edge at v leaves the basepoint side
    std::vector<int> out;
    for (int c : x.classes_at(v))
      if (x.hyperplane(c).side(v) == x.hyperplane(c).side(basepoint)) out.push_back(c);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) pairs.emplace(out[i], out[j]);
  }
  return labelled(x, pairs);
}

int dimension(const Complex& x) {
  if (x.num_hyperplanes() == 0) return 0;
  return max_clique(crossing_graph(x));
}

ComplexStats complex_stats(const Complex& x) {
  ComplexStats s;
  const auto& g = x.graph();
  s.max_degree = g.max_degree();
  if (g.basepoint) {
    auto d = g.bfs(*g.basepoint);
    int m = 0;
    for (int v = 0; v < g.num_vertices(); ++v) m = std::max(m, out_degree(g, d, v));
    s.max_out_degree = m;
  }
  s.dimension = dimension(x);
  return s;
}

int HyperplaneTree::local(int edge) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), edge);
  if (it == nodes.end() || *it != edge) return -1;
  return static_cast<int>(it - nodes.begin());
}

int HyperplaneTree::distance(int a, int b) const {
  int d = 0;
  while (depth[a] > depth[b]) a = parent[a], ++d;
  while (depth[b] > depth[a]) b = parent[b], ++d;
  while (a != b) a = parent[a], b = parent[b], d += 2;
  return d;
}

std::vector<int> HyperplaneTree::distances_from(const std::vector<int>& sources) const {
  std::vector<int> d(size(), -1);
  std::vector<int> q;
  for (int s : sources)
    if (d[s] < 0) {
      d[s] = 0;
      q.push_back(s);
    }
  for (std::size_t h = 0; h < q.size(); ++h)
    for (int w : adj[q[h]])
      if (d[w] < 0) {
        d[w] = d[q[h]] + 1;
        q.push_back(w);
      }
  return d;
}

bool HyperplaneTree::is_subtree(const std::vector<int>& locals) const {
  if (locals.empty()) return false;
  // a vertex set of a tree is connected iff exactly one member has its parent outside
  std::vector<char> in(size(), 0);
  for (int l : locals) in[l] = 1;
  int tops = 0;
  for (int l : locals)
    if (parent[l] < 0 || !in[parent[l]]) ++tops;
  return tops == 1;
}

HyperplaneTree hyperplane_tree(const Complex& x, int h, int root) {
  const auto& g = x.graph();
  HyperplaneTree t;
  t.hyperplane = h;
  t.nodes = x.hyperplane(h).edges;
  std::sort(t.nodes.begin(), t.nodes.end());
  const int m = t.size();
  t.adj.assign(m, {});
  for (int i = 0; i < m; ++i) {
    const auto& [u, v] = g.edges()[t.nodes[i]];
    for (int c : x.classes_at(u)) {
      if (c == h) continue;
      int u2 = x.across(u, c), v2 = x.across(v, c);
      if (u2 < 0 || v2 < 0) continue;
      int e = g.edge_index(u2, v2);
      if (e < 0) continue;
      int j = t.local(e);
      if (j < 0) continue;
      t.adj[i].push_back(j);
    }
    std::sort(t.adj[i].begin(), t.adj[i].end());
    t.adj[i].erase(std::unique(t.adj[i].begin(), t.adj[i].end()), t.adj[i].end());
  }
  int tree_edges = 0;
  for (int i = 0; i < m; ++i) tree_edges += static_cast<int>(t.adj[i].size());
  tree_edges /= 2;
  if (root < 0 || root >= m) throw Error(ErrorKind::InvalidInput, "tree root out of range");
  t.root = root;
  t.depth.assign(m, -1);
  t.parent.assign(m, -1);
  std::vector<int> q{root};
  t.depth[root] = 0;
  for (std::size_t k = 0; k < q.size(); ++k)
    for (int w : t.adj[q[k]])
      if (t.depth[w] < 0) {
        t.depth[w] = t.depth[q[k]] + 1;
        t.parent[w] = q[k];
        q.push_back(w);
      }
  if (static_cast<int>(q.size()) != m || tree_edges != m - 1)
    throw Error(ErrorKind::NotATree, "hyperplane " + std::to_string(h) + " is not a tree");
  return t;
}

VertexSet footprint(const Complex& x, int h, int v) {
  const auto& a = x.hyperplane(h);
  const auto& b = x.hyperplane(v);
  if (h != v && !contacts(a, b))
    throw Error(ErrorKind::NotInContact,
                "hyperplanes " + std::to_string(h) + " and " + std::to_string(v) + " do not contact");
  VertexSet out;
  for (int w : b.carrier)
    if (a.carrier_bits[w]) out.push_back(w);
  return out;
}

std::vector<int> imprint(const Complex& x, const HyperplaneTree& vtree, int h) {
  std::vector<int> out;
  for (int w : footprint(x, h, vtree.hyperplane))
    out.push_back(vtree.local(x.edge_at(w, vtree.hyperplane)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Colouring colour_imprints(const HyperplaneTree& tree, const std::vector<std::vector<int>>& family,
                          int max_load) {
  const int k = static_cast<int>(family.size());
  std::vector<int> load(tree.size(), 0);
  std::vector<int> top(k);
  for (int i = 0; i < k; ++i) {
    if (family[i].empty()) throw Error(ErrorKind::InvalidInput, "empty imprint");
    int best = family[i][0];
    for (int l : family[i]) {
      ++load[l];
      if (tree.depth[l] < tree.depth[best]) best = l;
    }
    top[i] = best;
  }
  for (int l = 0; l < tree.size(); ++l)
    if (load[l] > std::max(1, max_load))
      throw Error(ErrorKind::DegreeExceeded, "tree node carries " + std::to_string(load[l]) +
                                                 " imprints, bound " + std::to_string(max_load));
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return tree.depth[top[a]] < tree.depth[top[b]];
  });
  Colouring c(k, -1);
  std::vector<std::vector<int>> at(tree.size());
  for (int i : order) {
    std::set<int> used;
    for (int l : family[i])
      for (int j : at[l]) used.insert(c[j]);
    int col = 0;
    while (used.count(col)) ++col;
    c[i] = col;
    for (int l : family[i]) at[l].push_back(i);
  }
  return c;
}

}  // namespace cubeforest

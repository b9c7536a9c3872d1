#include "cubeforest/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <array>
#include <cmath>
#include <functional>
#include <tuple>
#include <numeric>
#include <set>
#include <unordered_set>

#include "cubeforest/error.hpp"

namespace cubeforest {

// ---- Geometry -------------------------------------------------------------

Geometry::Geometry(const Complex& x)
    : x_(&x), k_(x.num_hyperplanes()), delta_(x.graph().max_degree()),
      gamma_(contact_graph(x, false)) {
  rel_.assign(static_cast<std::size_t>(k_) * k_, 0);
  side_.assign(static_cast<std::size_t>(k_) * k_, 0);
  const auto& es = gamma_.graph.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::uint8_t r = gamma_.kinds[i] == ContactKind::Cross ? 2 : 1;
    rel_[idx(es[i].first, es[i].second)] = r;
    rel_[idx(es[i].second, es[i].first)] = r;
  }
  for (int w = 0; w < k_; ++w)
    for (int h = 0; h < k_; ++h)
      side_[idx(w, h)] = static_cast<std::uint8_t>(x.hyperplane(w).side(x.hyperplane(h).carrier[0]));
  trees_.resize(k_);
}

bool Geometry::separates(int w, int a, int b) const {
  if (w == a || w == b || cross(w, a) || cross(w, b)) return false;
  return side_of(w, a) != side_of(w, b);
}

const DistanceMatrix& Geometry::dist() const {
  if (!dist_) dist_ = std::make_unique<DistanceMatrix>(x_->graph());
  return *dist_;
}

const HyperplaneTree& Geometry::tree(int h) const {
  if (!trees_[h]) trees_[h] = std::make_unique<HyperplaneTree>(hyperplane_tree(*x_, h, 0));
  return *trees_[h];
}

const VertexSet& Geometry::footprint(int h, int v) const {
  auto key = std::make_pair(h, v);
  auto it = footprints_.find(key);
  if (it == footprints_.end()) it = footprints_.emplace(key, cubeforest::footprint(*x_, h, v)).first;
  return it->second;
}

const std::vector<int>& Geometry::imprint(int h, int v) const {
  auto key = std::make_pair(h, v);
  auto it = imprints_.find(key);
  if (it == imprints_.end()) it = imprints_.emplace(key, cubeforest::imprint(*x_, tree(v), h)).first;
  return it->second;
}

// ---- grading --------------------------------------------------------------

Grading grade(const Graph& gamma, int base) {
  const int k = gamma.num_vertices();
  if (base < 0 || base >= k) throw Error(ErrorKind::UnknownVertex, "base hyperplane");
  Grading gr;
  gr.base = base;
  gr.grade = gamma.bfs(base);
  int top = 0;
  for (int g : gr.grade) {
    if (g < 0) throw Error(ErrorKind::InvalidInput, "contact graph is disconnected");
    top = std::max(top, g);
  }
  gr.spheres.assign(top + 1, {});
  for (int h = 0; h < k; ++h) gr.spheres[gr.grade[h]].push_back(h);
  gr.cluster.assign(k, -1);
  std::vector<int> parent(k);
  for (int r = 0; r <= top; ++r) {
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (const auto& [a, b] : gamma.edges())
      if (gr.grade[a] >= r && gr.grade[b] >= r) parent[find(a)] = find(b);
    std::map<int, int> root_cluster;
    for (int h : gr.spheres[r]) {
      int root = find(h);
      auto it = root_cluster.find(root);
      if (it == root_cluster.end()) {
        it = root_cluster.emplace(root, static_cast<int>(gr.clusters.size())).first;
        gr.clusters.emplace_back();
      }
      gr.cluster[h] = it->second;
      gr.clusters[it->second].push_back(h);
    }
  }
  return gr;
}

int max_cluster_diameter(const Graph& gamma, const Grading& gr) {
  int best = 0;
  for (const auto& c : gr.clusters)
    for (int a : c) {
      auto d = gamma.bfs(a);
      for (int b : c) best = std::max(best, d[b]);
    }
  return best;
}

// ---- canonical paths ------------------------------------------------------

namespace {

bool key_less(const std::vector<int>& wa, const std::vector<int>& sa, const std::vector<int>& wb,
              const std::vector<int>& sb) {
  if (wa != wb) return wa < wb;
  return sa < sb;
}

}  // namespace

CanonicalPaths::CanonicalPaths(const Geometry& geo, const Grading& gr) : geo_(geo), gr_(gr) {
  const int k = geo.size();
  const auto& d = geo.dist();
  const auto& gamma = geo.gamma().graph;
  best_.assign(k, {});
  grandfather_.assign(k, -1);
  final_.assign(k, {-1, -1});
  const int base = gr.base;
  for (int z : geo.complex().hyperplane(base).carrier) best_[base][z] = State{{}, {base}, -1, -1};
  const int top = static_cast<int>(gr.spheres.size()) - 1;
  for (int j = 1; j <= top; ++j) {
    for (int h : gr.spheres[j]) {
      // realization ending anywhere on the carrier of h (needed when h is interior)
      if (j < top) {
        for (int z : geo.complex().hyperplane(h).carrier) {
          State best;
          bool have = false;
          for (int hp : gamma.neighbours(h)) {
            if (gr.grade[hp] != j - 1) continue;
            for (int y : geo.footprint(hp, h)) {
              const State& s = best_[hp].at(y);
              std::vector<int> w{d(y, z)};
              w.insert(w.end(), s.weight.begin(), s.weight.end());
              std::vector<int> seq = s.seq;
              seq.push_back(h);
              if (!have || key_less(w, seq, best.weight, best.seq)) {
                best = State{std::move(w), std::move(seq), hp, y};
                have = true;
              }
            }
          }
          best_[h][z] = std::move(best);
        }
      }
      // the target itself: the last realization ends at y_r
      std::vector<int> bw, bs;
      bool have = false;
      for (int hp : gamma.neighbours(h)) {
        if (gr.grade[hp] != j - 1) continue;
        for (int y : geo.footprint(hp, h)) {
          const State& s = best_[hp].at(y);
          std::vector<int> seq = s.seq;
          seq.push_back(h);
          if (!have || key_less(s.weight, seq, bw, bs)) {
            bw = s.weight;
            bs = std::move(seq);
            final_[h] = {hp, y};
            have = true;
          }
        }
      }
      if (j >= 2) grandfather_[h] = bs[j - 2];
    }
  }
}

CanonicalPath CanonicalPaths::path(int h) const {
  CanonicalPath out;
  if (h == gr_.base) {
    out.path = {h};
    return out;
  }
  auto [hp, y] = final_[h];
  const State& s = best_[hp].at(y);
  out.path = s.seq;
  out.path.push_back(h);
  out.weight = s.weight;
  out.points.push_back(y);
  int ch = hp, cy = y;
  while (true) {
    const State& st = best_[ch].at(cy);
    if (st.prev_h < 0) break;
    out.points.push_back(st.prev_y);
    ch = st.prev_h;
    cy = st.prev_y;
  }
  std::reverse(out.points.begin(), out.points.end());
  return out;
}

int CanonicalPaths::grandfather(int h) const {
  if (gr_.grade[h] < 2) throw Error(ErrorKind::InvalidInput, "grandfather needs grade >= 2");
  return grandfather_[h];
}

std::vector<CombingViolation> check_weak_combing(const Geometry& geo, const Grading& gr,
                                                 const CanonicalPaths& cp) {
  std::vector<CombingViolation> out;
  for (const auto& c : gr.clusters) {
    if (gr.grade[c[0]] < 2) continue;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        int g1 = cp.grandfather(c[i]), g2 = cp.grandfather(c[j]);
        if (g1 != g2 && !geo.contact(g1, g2)) out.push_back({c[i], c[j], g1, g2});
      }
  }
  return out;
}

// ---- hyperplane distance --------------------------------------------------

int hyperplane_distance(const Geometry& geo, int u, int h, std::size_t budget) {
  if (u == h) throw Error(ErrorKind::InvalidInput, "hyperplane distance needs H != U");
  if (geo.contact(u, h)) return 0;
  std::vector<int> seps;
  std::vector<int> pos(geo.size(), -1);
  for (int w = 0; w < geo.size(); ++w)
    if (geo.separates(w, h, u)) {
      pos[w] = static_cast<int>(seps.size());
      seps.push_back(w);
    }
  const int m = static_cast<int>(seps.size());
  if (m == 0) throw Error(ErrorKind::InternalInvariant, "non-contacting pair without separator");
  if (m > 64) throw Error(ErrorKind::BudgetExceeded, "more than 64 separating hyperplanes");
  std::vector<std::uint64_t> between(m * m, 0), crossing(m, 0);
  std::vector<char> bad(m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (geo.cross(seps[i], seps[j])) crossing[i] |= std::uint64_t{1} << j;
      if (j <= i) continue;
      for (int w = 0; w < geo.size(); ++w)
        if (geo.separates(w, seps[i], seps[j])) {
          if (pos[w] < 0) bad[i * m + j] = bad[j * m + i] = 1;
          else between[i * m + j] |= std::uint64_t{1} << pos[w];
        }
      between[j * m + i] = between[i * m + j];
    }
  // closure under betweenness; nullopt when it leaves the separators or has a crossing
  auto close = [&](std::uint64_t s) -> std::optional<std::uint64_t> {
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < m; ++i) {
        if (!(s >> i & 1)) continue;
        for (int j = i + 1; j < m; ++j) {
          if (!(s >> j & 1)) continue;
          if (bad[i * m + j]) return std::nullopt;
          std::uint64_t t = s | between[i * m + j];
          if (t != s) {
            s = t;
            changed = true;
          }
        }
      }
    }
    for (int i = 0; i < m; ++i)
      if ((s >> i & 1) && (crossing[i] & s)) return std::nullopt;
    return s;
  };
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue;
  for (int i = 0; i < m; ++i) {
    std::uint64_t s = std::uint64_t{1} << i;
    if (seen.insert(s).second) queue.push_back(s);
  }
  int best = m + 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    if (seen.size() > budget) throw Error(ErrorKind::BudgetExceeded, "separating chain search");
    std::uint64_t s = queue[q];
    bool maximal = true;
    for (int x = 0; x < m; ++x) {
      if (s >> x & 1) continue;
      auto t = close(s | (std::uint64_t{1} << x));
      if (!t) continue;
      maximal = false;
      if (seen.insert(*t).second) queue.push_back(*t);
    }
    if (maximal) best = std::min(best, __builtin_popcountll(s));
  }
  return best;
}

// ---- fathers ----------------------------------------------------------------

namespace {

int min_depth(const HyperplaneTree& t, const std::vector<int>& nodes) {
  int best = t.size();
  for (int l : nodes) best = std::min(best, t.depth[l]);
  return best;
}

int set_distance(const HyperplaneTree& t, const std::vector<int>& a, const std::vector<int>& b) {
  auto d = t.distances_from(a);
  int best = t.size();
  for (int l : b) best = std::min(best, d[l]);
  return best;
}

}  // namespace

FatherData fathers(const Geometry& geo, int u, int h) {
  FatherData fd;
  fd.h = h;
  fd.grandfather = u;
  for (int v = 0; v < geo.size(); ++v)
    if (v != u && v != h && geo.contact(v, u) && geo.contact(v, h)) fd.potential.push_back(v);
  if (fd.potential.empty())
    throw Error(ErrorKind::EmptyPF, "hyperplane " + std::to_string(h) + " has no potential father");
  const auto& ut = geo.tree(u);
  std::set<int> ij;
  std::tuple<int, int, int> best{ut.size() + 1, 0, 0};
  for (int v : fd.potential) {
    const auto& j = geo.imprint(v, u);
    ij.insert(j.begin(), j.end());
    int d1 = min_depth(ut, j);
    int d2 = set_distance(geo.tree(v), geo.imprint(h, v), geo.imprint(u, v));
    std::tuple<int, int, int> key{d1, d2, v};
    if (fd.father < 0 || key < best) {
      best = key;
      fd.father = v;
    }
  }
  fd.iterated_imprint.assign(ij.begin(), ij.end());
  if (!ut.is_subtree(fd.iterated_imprint))
    throw Error(ErrorKind::InternalInvariant,
                "iterated imprint of " + std::to_string(h) + " is not a subtree");
  fd.root = fd.iterated_imprint[0];
  for (int l : fd.iterated_imprint)
    if (ut.depth[l] < ut.depth[fd.root]) fd.root = l;
  fd.root_depth = ut.depth[fd.root];
  return fd;
}

bool precedes(const Geometry& geo, const FatherData& a, const FatherData& b) {
  if (a.root == b.root) return a.h < b.h;
  const auto& t = geo.tree(a.grandfather);
  int x = b.root;
  while (t.depth[x] > t.depth[a.root]) x = t.parent[x];
  return x == a.root;
}

int separating_osculator(const Geometry& geo, int u, const FatherData& fd, int d) {
  const int h = fd.h;
  std::vector<int> cands;
  for (int w = 0; w < geo.size(); ++w)
    if (geo.osculate(w, h) && geo.separates(w, h, u)) cands.push_back(w);
  if (cands.empty())
    throw Error(ErrorKind::NoSeparator, "hyperplane " + std::to_string(h) + " has no separating osculator");
  if (d >= 2) {
    if (cands.size() != 1)
      throw Error(ErrorKind::NonUniqueAtDepth2,
                  "hyperplane " + std::to_string(h) + " has several separating osculators");
    return cands[0];
  }
  const auto& ut = geo.tree(u);
  int best = -1;
  std::pair<int, int> best_key;
  // a minimal maximal chain can hide a farther osculator that has no root
  // in the U-tree (staircase(4), U=0, H=6); such candidates rank last
  for (int w : cands) {
    int depth = geo.contact(w, u) ? min_depth(ut, geo.imprint(w, u)) : std::numeric_limits<int>::max();
    std::pair<int, int> key{depth, w};
    if (best < 0 || key < best_key) {
      best = w;
      best_key = key;
    }
  }
  return best;
}

// ---- Upsilon ----------------------------------------------------------------

int UpsilonDecomposition::local(int h) const {
  auto it = std::lower_bound(members.begin(), members.end(), h);
  if (it == members.end() || *it != h) return -1;
  return static_cast<int>(it - members.begin());
}

UpsilonDecomposition build_upsilon(const Geometry& geo, int u, const std::vector<int>& members) {
  UpsilonDecomposition dec;
  dec.u = u;
  dec.members = members;
  std::sort(dec.members.begin(), dec.members.end());
  const int m = static_cast<int>(dec.members.size());
  for (int h : dec.members) {
    dec.fd.push_back(fathers(geo, u, h));
    int d = hyperplane_distance(geo, u, h);
    dec.distance.push_back(d);
    dec.sep.push_back(separating_osculator(geo, u, dec.fd.back(), d));
    dec.father_separated.push_back(dec.sep.back() == dec.fd.back().father);
  }
  std::vector<std::pair<int, int>> all, e0, e1, e2;
  // second hyperplane is a father osculator of the first
  auto father_osculator = [&](int i, int ip) {
    int h = dec.members[i], hp = dec.members[ip];
    int f = dec.fd[i].father;
    if (geo.contact(dec.sep[ip], h) || dec.sep[ip] == h) return false;
    if (geo.separates(h, u, hp) || geo.separates(hp, u, h)) return false;
    if (!geo.contact(hp, f) || !geo.osculate(hp, f)) return false;
    return dec.sep[i] != f;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int a = dec.members[i], b = dec.members[j];
      int fa = dec.fd[i].father, fb = dec.fd[j].father;
      if (!geo.contact(a, b) || fa == fb || geo.contact(fa, fb)) continue;
      all.emplace_back(i, j);
      if (dec.sep[i] == dec.sep[j] || dec.sep[i] == b || dec.sep[j] == a) {
        e1.emplace_back(i, j);
        continue;
      }
      bool two = false;
      if (precedes(geo, dec.fd[i], dec.fd[j])) two = father_osculator(j, i);
      else if (precedes(geo, dec.fd[j], dec.fd[i])) two = father_osculator(i, j);
      (two ? e2 : e0).emplace_back(i, j);
    }
  dec.all = Graph(m, all);
  dec.part0 = Graph(m, e0);
  dec.part1 = Graph(m, e1);
  dec.part2 = Graph(m, e2);
  return dec;
}

UpsilonColouring colour_upsilon(const Geometry& geo, const UpsilonDecomposition& dec) {
  const int m = static_cast<int>(dec.members.size());
  UpsilonColouring out;
  out.c0.assign(m, -1);
  out.c1.assign(m, -1);
  out.c2.assign(m, -1);

  // c1: hyperplanes sharing a separating osculator W, by imprints on W,
  // avoiding the colour of W itself
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) groups[dec.sep[i]].push_back(i);
  std::vector<std::pair<int, int>> group_order;
  for (const auto& [w, list] : groups) {
    int dmin = dec.distance[list[0]];
    for (int i : list) dmin = std::min(dmin, dec.distance[i]);
    group_order.emplace_back(dmin, w);
  }
  std::sort(group_order.begin(), group_order.end());
  for (const auto& [dmin, w] : group_order) {
    const auto& list = groups[w];
    int wl = dec.local(w);
    int wc = 0;
    if (wl >= 0) {
      wc = out.c1[wl];
      if (wc < 0)
        throw Error(ErrorKind::InternalInvariant, "separating osculator coloured out of order");
    }
    std::vector<std::vector<int>> family;
    for (int i : list) family.push_back(geo.imprint(dec.members[i], w));
    Colouring c = colour_imprints(geo.tree(w), family, 2 * geo.delta());
    for (std::size_t t = 0; t < list.size(); ++t) {
      int col = c[t] + 1;
      if (wc >= 1 && col >= wc) ++col;
      out.c1[list[t]] = col;
    }
  }

  // c2: greedy along a linear extension of the root order
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_pair(dec.fd[a].root_depth, dec.members[a]) <
           std::make_pair(dec.fd[b].root_depth, dec.members[b]);
  });
  out.c2 = greedy_colour(dec.part2, order);

  // c0: bipartition
  for (int s = 0; s < m; ++s) {
    if (out.c0[s] >= 0) continue;
    out.c0[s] = 0;
    std::vector<int> q{s};
    for (std::size_t h = 0; h < q.size(); ++h)
      for (int w : dec.part0.neighbours(q[h])) {
        if (out.c0[w] < 0) {
          out.c0[w] = 1 - out.c0[q[h]];
          q.push_back(w);
        } else if (out.c0[w] == out.c0[q[h]]) {
          throw Error(ErrorKind::OddCycleInUpsilon0,
                      "odd cycle in Upsilon_0 of hyperplane " + std::to_string(dec.u));
        }
      }
  }

  std::map<std::array<int, 3>, int> intern;
  for (int i = 0; i < m; ++i) {
    std::array<int, 3> key{out.c0[i], out.c1[i], out.c2[i]};
    auto it = intern.emplace(key, static_cast<int>(intern.size())).first;
    out.combined.push_back(it->second);
  }
  out.palette = static_cast<int>(intern.size());
  if (!verify_colouring(dec.part0, out.c0) || !verify_colouring(dec.part1, out.c1) ||
      !verify_colouring(dec.part2, out.c2) || !verify_colouring(dec.all, out.combined))
    throw Error(ErrorKind::ImproperColouring,
                "Upsilon colouring of hyperplane " + std::to_string(dec.u) + " is not proper");
  return out;
}

// ---- balls and the whole contact graph ---------------------------------------

BallColouring colour_ball(const Geometry& geo, int v0, int r, PipelineStats* stats) {
  PipelineStats local;
  PipelineStats& st = stats ? *stats : local;
  const int two_delta = 2 * geo.delta();
  Grading gr = grade(geo.gamma().graph, v0);
  BallColouring ball;
  ball.center = v0;
  ball.radius = r;
  std::map<std::vector<int>, int> intern;
  auto assign = [&](int h, std::vector<int> key) {
    auto it = intern.emplace(std::move(key), static_cast<int>(intern.size())).first;
    ball.colour[h] = it->second;
  };
  auto note_imprints = [&](const Colouring& c) {
    ++st.imprint_colourings;
    st.max_imprint_colours = std::max(st.max_imprint_colours, palette_size(c));
  };

  assign(v0, {0});
  const int top = std::min(r, static_cast<int>(gr.spheres.size()) - 1);
  if (top >= 1) {
    const auto& s1 = gr.spheres[1];
    std::vector<std::vector<int>> fam;
    for (int h : s1) fam.push_back(geo.imprint(h, v0));
    Colouring c = colour_imprints(geo.tree(v0), fam, two_delta);
    note_imprints(c);
    for (std::size_t i = 0; i < s1.size(); ++i) assign(s1[i], {1, c[i]});
  }
  std::unique_ptr<CanonicalPaths> cp;
  if (top >= 2) cp = std::make_unique<CanonicalPaths>(geo, gr);
  for (int k = 2; k <= top; ++k) {
    const auto& sk = gr.spheres[k];
    std::map<int, std::vector<int>> by_grandfather;
    for (int h : sk) by_grandfather[cp->grandfather(h)].push_back(h);
    std::map<int, int> father, c2col;
    for (const auto& [u, members] : by_grandfather) {
      UpsilonDecomposition dec = build_upsilon(geo, u, members);
      UpsilonColouring uc = colour_upsilon(geo, dec);
      ++st.upsilon_graphs;
      st.max_upsilon_colours = std::max(st.max_upsilon_colours, uc.palette);
      st.max_upsilon1_colours = std::max(st.max_upsilon1_colours, palette_size(uc.c1));
      st.max_upsilon2_colours = std::max(st.max_upsilon2_colours, palette_size(uc.c2));
      st.upsilon_edges[0] += dec.part0.num_edges();
      st.upsilon_edges[1] += dec.part1.num_edges();
      st.upsilon_edges[2] += dec.part2.num_edges();
      for (std::size_t i = 0; i < dec.members.size(); ++i) {
        father[dec.members[i]] = dec.fd[i].father;
        c2col[dec.members[i]] = uc.combined[i];
      }
    }
    std::map<int, std::vector<int>> by_father;
    for (int h : sk) by_father[father[h]].push_back(h);
    std::map<int, int> c1col;
    for (const auto& [v, members] : by_father) {
      std::vector<std::vector<int>> fam;
      for (int h : members) fam.push_back(geo.imprint(h, v));
      Colouring c = colour_imprints(geo.tree(v), fam, two_delta);
      note_imprints(c);
      for (std::size_t i = 0; i < members.size(); ++i) c1col[members[i]] = c[i];
    }
    for (int h : sk) {
      int f = father[h], g = cp->grandfather(h);
      if (!ball.colour.count(f) || !ball.colour.count(g))
        throw Error(ErrorKind::InternalInvariant, "father or grandfather outside the ball");
      assign(h, {k, ball.colour[f], ball.colour[g], c1col[h], c2col[h]});
    }
  }
  for (const auto& [h, c] : ball.colour) ball.members.push_back(h);
  for (int h : ball.members)
    for (int w : geo.gamma().graph.neighbours(h)) {
      auto it = ball.colour.find(w);
      if (it != ball.colour.end() && it->second == ball.colour[h])
        throw Error(ErrorKind::ImproperColouring, "ball colouring clash between hyperplanes " +
                                                      std::to_string(h) + " and " + std::to_string(w));
    }
  ball.palette = static_cast<int>(intern.size());
  ++st.balls;
  st.max_ball_colours = std::max(st.max_ball_colours, ball.palette);
  return ball;
}

long double palette_bound(int delta) {
  return 2.0L * 582613.0L * std::pow(static_cast<long double>(delta), 26.0L);
}

Theorem1Result colour_contact_graph(const Complex& x) {
  Theorem1Result res;
  const int k = x.num_hyperplanes();
  res.delta = x.graph().max_degree();
  res.colouring.assign(k, 0);
  if (dimension(x) > 2) throw Error(ErrorKind::NotTwoDimensional, "complex has dimension above 2");
  if (k <= 1 || res.delta <= 1) {
    res.palette = k == 0 ? 0 : 1;
    return res;
  }
  Geometry geo(x);
  Grading gr = grade(geo.gamma().graph, 0);
  for (const auto& cluster : gr.clusters) {
    int v0 = cluster[0];
    BallColouring ball = colour_ball(geo, v0, 5, &res.stats);
    int parity = gr.grade[v0] % 2;
    for (int h : cluster) {
      auto it = ball.colour.find(h);
      if (it == ball.colour.end())
        throw Error(ErrorKind::InternalInvariant, "cluster not inside the ball of radius 5");
      res.colouring[h] = 2 * it->second + parity;
    }
  }
  if (auto bad = improper_edge(geo.gamma().graph, res.colouring))
    throw Error(ErrorKind::ImproperColouring,
                "hyperplanes " + std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                    " share a colour");
  res.palette = palette_size(res.colouring);
  if (res.palette > palette_bound(res.delta))
    throw Error(ErrorKind::InternalInvariant, "palette exceeds the worst-case bound");
  return res;
}

bool check_degree_bound(const Complex& x, int basepoint) {
  const auto& g = x.graph();
  auto d = g.bfs(basepoint);
  int d0 = 0;
  for (int v = 0; v < g.num_vertices(); ++v) d0 = std::max(d0, out_degree(g, d, v));
  return g.max_degree() <= d0 + 2;
}

}  // namespace cubeforest

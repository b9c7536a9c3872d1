#include "cubeforest/event_structure.hpp"

#include <algorithm>
#include <unordered_map>

#include "cubeforest/error.hpp"
#include "cubeforest/pipeline.hpp"

namespace cubeforest {

EventStructure::EventStructure(int n, std::vector<std::pair<int, int>> causality,
                               std::vector<std::pair<int, int>> conflict)
    : n_(n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative event count");
  leq_.assign(n, std::vector<char>(n, 0));
  conflict_.assign(n, std::vector<char>(n, 0));
  auto check = [&](int e) {
    if (e < 0 || e >= n) throw Error(ErrorKind::UnknownVertex, "event " + std::to_string(e));
  };
  for (int e = 0; e < n; ++e) leq_[e][e] = 1;
  for (const auto& [a, b] : causality) {
    check(a);
    check(b);
    leq_[a][b] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq_[i][k])
        for (int j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = 1;
  for (const auto& [a, b] : conflict) {
    check(a);
    check(b);
    conflict_[a][b] = conflict_[b][a] = 1;
  }
}

bool EventStructure::concurrent(int a, int b) const {
  return a != b && !leq_[a][b] && !leq_[b][a] && !conflict_[a][b];
}

bool EventStructure::minimal_conflict(int a, int b) const {
  if (!conflict_[a][b]) return false;
  for (int c = 0; c < n_; ++c) {
    if (c == a || c == b) continue;
    if ((leq_[c][a] && conflict_[c][b]) || (leq_[c][b] && conflict_[c][a])) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> EventStructure::order_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (a != b && leq_[a][b]) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> EventStructure::conflict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = a; b < n_; ++b)
      if (conflict_[a][b]) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> EventStructure::covering_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : order_pairs()) {
    if (leq_[b][a]) continue;  // cycles have no covers
    bool cover = true;
    for (int c = 0; c < n_ && cover; ++c)
      if (c != a && c != b && leq_[a][c] && leq_[c][b] && !leq_[c][a] && !leq_[b][c]) cover = false;
    if (cover) out.emplace_back(a, b);
  }
  return out;
}

Graph EventStructure::independence_graph() const {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (independent(a, b)) es.emplace_back(a, b);
  return Graph(n_, std::move(es));
}

int EventStructure::degree() const { return max_clique(independence_graph()); }

std::vector<std::string> validate(const EventStructure& es) {
  std::vector<std::string> out;
  const int n = es.size();
  auto name = [](int e) { return std::to_string(e); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (es.leq(a, b) && es.leq(b, a))
        out.push_back("causality is not antisymmetric: " + name(a) + " and " + name(b) + " precede each other");
  for (int e = 0; e < n; ++e)
    if (es.conflict(e, e)) out.push_back("event " + name(e) + " is in conflict with itself");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!es.conflict(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (es.leq(b, c) && !es.conflict(a, c))
          out.push_back("conflict " + name(a) + "#" + name(b) + " does not propagate to " + name(c) +
                        " above " + name(b));
    }
  return out;
}

Domain domain(const EventStructure& es, std::size_t budget) {
  auto problems = validate(es);
  if (!problems.empty()) throw Error(ErrorKind::InvalidInput, problems.front());
  const int n = es.size();
  Domain d;
  std::unordered_map<Bitset, int> index;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_event;
  d.configurations.push_back(Bitset(n));
  index.emplace(d.configurations[0], 0);
  // breadth-first by size; each configuration grows by one enabled event
  for (std::size_t i = 0; i < d.configurations.size(); ++i) {
    const Bitset c = d.configurations[i];
    for (int e = 0; e < n; ++e) {
      if (c[e]) continue;
      bool enabled = true;
      for (int f = 0; f < n && enabled; ++f) {
        if (f != e && es.leq(f, e) && !c[f]) enabled = false;
        if (c[f] && es.conflict(e, f)) enabled = false;
      }
      if (!enabled) continue;
      Bitset next = c;
      next.set(e);
      auto [it, fresh] = index.emplace(next, static_cast<int>(d.configurations.size()));
      if (fresh) {
        if (d.configurations.size() >= budget)
          throw Error(ErrorKind::ConfigExplosion, "more than " + std::to_string(budget) + " configurations");
        d.configurations.push_back(next);
      }
      edges.emplace_back(static_cast<int>(i), it->second);
    }
  }
  d.graph = MedianGraph(static_cast<int>(d.configurations.size()), edges, 0);
  auto check = is_median_graph(d.graph);
  if (!check.ok) throw Error(ErrorKind::InternalInvariant, "domain is not median: " + check.reason);
  Complex x(d.graph);
  if (x.num_hyperplanes() != n)
    throw Error(ErrorKind::InternalInvariant, "domain hyperplanes do not match the events");
  d.event_of_hyperplane.assign(n, -1);
  d.hyperplane_of_event.assign(n, -1);
  for (int h = 0; h < n; ++h) {
    const auto [a, b] = d.graph.edges()[x.hyperplane(h).edges.front()];
    const int e = static_cast<int>((d.configurations[a] ^ d.configurations[b]).find_first());
    d.event_of_hyperplane[h] = e;
    d.hyperplane_of_event[e] = h;
  }
  return d;
}

EventStructure from_pointed_complex(const Complex& x, int basepoint) {
  const int k = x.num_hyperplanes();
  if (!x.graph().has_vertex(basepoint)) throw Error(ErrorKind::UnknownVertex, std::to_string(basepoint));
  // a separates b from the basepoint: b lies wholly on the far side of a
  auto separates = [&](int a, int b) {
    const auto& ha = x.hyperplane(a);
    const bool far = !ha.in_b[basepoint];
    return std::all_of(x.hyperplane(b).carrier.begin(), x.hyperplane(b).carrier.end(),
                       [&](int v) { return ha.in_b[v] == far; });
  };
  std::vector<std::pair<int, int>> order, conflict;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      if (separates(a, b)) order.emplace_back(a, b);
      if (a < b && !crosses(x.hyperplane(a), x.hyperplane(b)) && !separates(a, b) && !separates(b, a))
        conflict.emplace_back(a, b);
    }
  return EventStructure(k, std::move(order), std::move(conflict));
}

bool verify_nice(const EventStructure& es, const std::vector<int>& label) {
  if (static_cast<int>(label.size()) != es.size()) return false;
  for (int a = 0; a < es.size(); ++a)
    for (int b = a + 1; b < es.size(); ++b)
      if (label[a] == label[b] && es.independent(a, b)) return false;
  return true;
}

Labeling nice_label(const EventStructure& es, LabelMethod method, std::int64_t budget) {
  return nice_label(es, domain(es), method, budget);
}

Labeling nice_label(const EventStructure& es, const Domain& d, LabelMethod method, std::int64_t budget) {
  if (static_cast<int>(d.hyperplane_of_event.size()) != es.size())
    throw Error(ErrorKind::InvalidInput, "domain does not belong to the event structure");
  Complex x(d.graph);
  Graph pointed = pointed_contact_graph(x, 0).graph;
  Colouring c;
  switch (method) {
    case LabelMethod::Exact:
      exact_chromatic_number(pointed, &c, budget);
      break;
    case LabelMethod::Greedy:
      c = greedy_colour(pointed);
      break;
    case LabelMethod::Theorem1:
      if (dimension(x) > 2) throw Error(ErrorKind::NotTwoDimensional, "domain has dimension above 2");
      c = colour_contact_graph(x).colouring;
      break;
  }
  Labeling out;
  out.method = method;
  out.label.assign(es.size(), 0);
  for (int h = 0; h < x.num_hyperplanes(); ++h) out.label[d.event_of_hyperplane[h]] = c[h];
  out.num_labels = palette_size(out.label);
  if (!verify_nice(es, out.label)) throw Error(ErrorKind::ImproperColouring, "labeling is not nice");
  return out;
}

}  // namespace cubeforest

#include "cubeforest/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "cubeforest/error.hpp"

namespace cubeforest::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::pair<int, int> as_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) bad(std::string(what) + " must be a pair");
  return {as_int(j[0], what), as_int(j[1], what)};
}

// position of each scalar label in a list
std::map<json, int> label_index(const json& list, const char* what) {
  if (!list.is_array()) bad(std::string(what) + " must be an array");
  std::map<json, int> idx;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!list[i].is_primitive() || list[i].is_null()) bad(std::string(what) + " entries must be scalars");
    if (!idx.emplace(list[i], static_cast<int>(i)).second) bad(std::string("duplicate entry in ") + what);
  }
  return idx;
}

int lookup(const std::map<json, int>& idx, const json& key, const char* what) {
  auto it = idx.find(key);
  if (it == idx.end()) throw Error(ErrorKind::UnknownVertex, std::string(what) + " " + key.dump());
  return it->second;
}

json vertex_list(int n) {
  json v = json::array();
  for (int i = 0; i < n; ++i) v.push_back(i);
  return v;
}

json edge_list(const std::vector<std::pair<int, int>>& es) {
  json out = json::array();
  for (const auto& [a, b] : es) out.push_back({a, b});
  return out;
}

// vertices must be exactly 0..n-1 in some order
std::pair<int, std::vector<std::pair<int, int>>> read_graph(const json& j) {
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("vertices must be an array");
  const int n = static_cast<int>(vs.size());
  std::vector<char> seen(n, 0);
  for (const auto& v : vs) {
    int x = as_int(v, "vertex");
    if (x < 0 || x >= n || seen[x]) bad("vertices must be 0..n-1 without repeats");
    seen[x] = 1;
  }
  std::vector<std::pair<int, int>> es;
  const json& ej = field(j, "edges");
  if (!ej.is_array()) bad("edges must be an array");
  for (const auto& e : ej) es.push_back(as_pair(e, "edge"));
  return {n, es};
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const MedianGraph& g) {
  json j;
  j["vertices"] = vertex_list(g.num_vertices());
  j["edges"] = edge_list(g.edges());
  if (g.basepoint) j["basepoint"] = *g.basepoint;
  return j;
}

json to_json(const Graph& g) {
  json j;
  j["vertices"] = vertex_list(g.num_vertices());
  j["edges"] = edge_list(g.edges());
  return j;
}

MedianGraph median_graph_from_json(const json& j) {
  auto [n, es] = read_graph(j);
  std::optional<int> bp;
  if (j.contains("basepoint") && !j.at("basepoint").is_null()) bp = as_int(j.at("basepoint"), "basepoint");
  return MedianGraph(n, std::move(es), bp);
}

Graph graph_from_json(const json& j) {
  auto [n, es] = read_graph(j);
  return Graph(n, std::move(es));
}

json hyperplanes_json(const Complex& x) {
  json out = json::array();
  for (const auto& h : x.hyperplanes()) {
    json e = json::array();
    for (int i : h.edges) e.push_back({x.graph().edges()[i].first, x.graph().edges()[i].second});
    out.push_back({{"id", h.id}, {"edges", e}, {"half_a", h.half_a}, {"half_b", h.half_b}, {"carrier", h.carrier}});
  }
  return out;
}

json contact_graph_json(const ContactGraph& c) {
  json es = json::array();
  for (std::size_t i = 0; i < c.graph.edges().size(); ++i) {
    const auto& [a, b] = c.graph.edges()[i];
    es.push_back({a, b, c.kinds[i] == ContactKind::Cross ? "cross" : "osculate"});
  }
  return {{"vertices", vertex_list(c.graph.num_vertices())}, {"edges", es}};
}

std::string contact_graph_dot(const ContactGraph& c) {
  std::ostringstream out;
  out << "graph contact {\n";
  for (int v = 0; v < c.graph.num_vertices(); ++v) out << "  " << v << ";\n";
  for (std::size_t i = 0; i < c.graph.edges().size(); ++i) {
    const auto& [a, b] = c.graph.edges()[i];
    out << "  " << a << " -- " << b;
    if (c.kinds[i] == ContactKind::Osculate) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

json colouring_json(const std::string& method, const Colouring& c, bool proper, int delta) {
  json cols = json::object();
  for (std::size_t h = 0; h < c.size(); ++h) cols[std::to_string(h)] = c[h];
  return {{"method", method}, {"colours", cols}, {"num_colours", palette_size(c)},
          {"proper", proper}, {"delta", delta}};
}

Colouring colouring_from_json(const json& j, int expected_size) {
  const json& cols = field(j, "colours");
  if (!cols.is_object()) bad("colours must be an object");
  Colouring c(expected_size, -1);
  for (const auto& [key, val] : cols.items()) {
    int h = -1;
    try {
      std::size_t used = 0;
      h = std::stoi(key, &used);
      if (used != key.size()) h = -1;
    } catch (const std::exception&) {
      h = -1;
    }
    if (h < 0 || h >= expected_size) throw Error(ErrorKind::UnknownVertex, "colour key " + key);
    c[h] = as_int(val, "colour");
  }
  if (std::count(c.begin(), c.end(), -1)) bad("colouring does not cover every vertex");
  return c;
}

json to_json(const BoxFamily& b) {
  json boxes = json::array();
  for (const auto& x : b.boxes)
    boxes.push_back({{x.iv[0][0], x.iv[0][1]}, {x.iv[1][0], x.iv[1][1]}, {x.iv[2][0], x.iv[2][1]}});
  return {{"boxes", boxes}};
}

BoxFamily boxes_from_json(const json& j) {
  const json& list = field(j, "boxes");
  if (!list.is_array()) bad("boxes must be an array");
  BoxFamily b;
  for (const auto& bj : list) {
    if (!bj.is_array() || bj.size() != 3) bad("a box has three intervals");
    Box3 x;
    for (int d = 0; d < 3; ++d) {
      auto [lo, hi] = as_pair(bj[d], "interval");
      if (lo >= hi || lo < 0) bad("intervals need 0 <= lo < hi");
      x.iv[d] = {lo, hi};
    }
    b.boxes.push_back(x);
  }
  return b;
}

json to_json(const Wallspace& w) {
  json walls = json::array();
  for (const auto& wall : w.walls) {
    json a = json::array(), b = json::array();
    for (int p = 0; p < w.num_points; ++p) (wall[p] ? b : a).push_back(p);
    walls.push_back({a, b});
  }
  return {{"points", vertex_list(w.num_points)}, {"walls", walls}};
}

Wallspace wallspace_from_json(const json& j) {
  auto idx = label_index(field(j, "points"), "points");
  Wallspace w;
  w.num_points = static_cast<int>(idx.size());
  const json& walls = field(j, "walls");
  if (!walls.is_array()) bad("walls must be an array");
  for (const auto& wj : walls) {
    if (!wj.is_array() || wj.size() != 2) bad("a wall is a pair of sides");
    Bitset side(w.num_points);
    std::vector<char> covered(w.num_points, 0);
    for (int s = 0; s < 2; ++s) {
      if (!wj[s].is_array()) bad("a wall side must be an array");
      for (const auto& p : wj[s]) {
        int i = lookup(idx, p, "point");
        if (covered[i]) bad("point " + p.dump() + " lies on both sides of a wall");
        covered[i] = 1;
        if (s == 1) side.set(i);
      }
    }
    if (std::count(covered.begin(), covered.end(), 0)) bad("wall sides do not cover every point");
    w.walls.push_back(side);
  }
  return w;
}

json to_json(const EventStructure& es) {
  return {{"events", vertex_list(es.size())},
          {"causality", edge_list(es.covering_pairs())},
          {"conflict", edge_list(es.conflict_pairs())}};
}

EventStructure event_structure_from_json(const json& j) {
  auto idx = label_index(field(j, "events"), "events");
  auto pairs = [&](const char* key) {
    std::vector<std::pair<int, int>> out;
    if (!j.contains(key)) return out;
    const json& list = j.at(key);
    if (!list.is_array()) bad(std::string(key) + " must be an array");
    for (const auto& p : list) {
      if (!p.is_array() || p.size() != 2) bad(std::string(key) + " entries are pairs");
      out.emplace_back(lookup(idx, p[0], "event"), lookup(idx, p[1], "event"));
    }
    return out;
  };
  return EventStructure(static_cast<int>(idx.size()), pairs("causality"), pairs("conflict"));
}

json to_json(const std::vector<TreeFactor>& factors, const IsometryReport& rep) {
  json fs = json::array();
  for (const auto& f : factors)
    fs.push_back({{"colour", f.colour},
                  {"walls", f.walls},
                  {"tree", to_json(f.tree)},
                  {"vertex_map", f.vertex_map},
                  {"representative", f.representative}});
  json j{{"num_factors", factors.size()}, {"factors", fs}, {"isometric", rep.ok}};
  if (rep.counterexample)
    j["counterexample"] = {{"pair", {rep.counterexample->first, rep.counterexample->second}},
                           {"distance", rep.expected},
                           {"factor_sum", rep.got}};
  return j;
}

json to_json(const Recubulation& r) {
  return {{"graph", to_json(r.graph)},
          {"image", r.image},
          {"hyperplane_of", r.hyperplane_of},
          {"added_points", r.added_points},
          {"dimension", r.dimension},
          {"max_degree", r.graph.max_degree()}};
}

json labeling_json(const Labeling& l) {
  const char* m = l.method == LabelMethod::Theorem1 ? "theorem1" : l.method == LabelMethod::Exact ? "exact" : "greedy";
  json labels = json::object();
  for (std::size_t e = 0; e < l.label.size(); ++e) labels[std::to_string(e)] = l.label[e];
  return {{"method", m}, {"labels", labels}, {"num_labels", l.num_labels}, {"nice", true}};
}

}  // namespace cubeforest::io

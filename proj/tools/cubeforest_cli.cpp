// cubeforest command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 budget exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "cubeforest/complex.hpp"
#include "cubeforest/constructions.hpp"
#include "cubeforest/error.hpp"
#include "cubeforest/event_structure.hpp"
#include "cubeforest/io.hpp"
#include "cubeforest/median_graph.hpp"
#include "cubeforest/pipeline.hpp"
#include "cubeforest/tree_embedding.hpp"

namespace cf = cubeforest;
using cf::io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Options {
  std::string input;
  std::string output;
  std::size_t max_vertices = 5000;
  std::size_t max_orientations = 2'000'000;
  std::int64_t oracle_budget = 20'000'000;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty())
    std::cout << text;
  else
    cf::io::write_file(o.output, text);
}

void emit(const Options& o, const json& j) { emit(o, cf::io::dump(j)); }

cf::MedianGraph load_median(const Options& o) {
  if (o.input.empty()) throw cf::Error(cf::ErrorKind::InvalidInput, "--input is required");
  cf::MedianGraph g = cf::io::median_graph_from_json(cf::io::read_file(o.input));
  if (static_cast<std::size_t>(g.num_vertices()) > o.max_vertices)
    throw cf::Error(cf::ErrorKind::BudgetExceeded, "input exceeds --max-vertices");
  auto check = cf::is_median_graph(g);
  if (!check.ok) throw cf::Error(cf::ErrorKind::NotMedian, check.reason);
  return g;
}

int exit_code(const cf::Error& e) {
  if (e.is_budget()) return kBudget;
  switch (e.kind()) {
    case cf::ErrorKind::InternalInvariant:
    case cf::ErrorKind::PostconditionFailed:
    case cf::ErrorKind::ImproperColouring:
    case cf::ErrorKind::NotMedianAfterLift:
    case cf::ErrorKind::OddCycleInUpsilon0:
      return kFailed;
    default:
      return kUsage;
  }
}

cf::Graph select_graph(const cf::Complex& x, const std::string& which, std::optional<int> basepoint) {
  if (which == "contact") return cf::contact_graph(x).graph;
  if (which == "crossing") return cf::crossing_graph(x);
  int bp = basepoint ? *basepoint : x.graph().basepoint.value_or(0);
  if (!x.graph().has_vertex(bp)) throw cf::Error(cf::ErrorKind::UnknownVertex, std::to_string(bp));
  return cf::pointed_contact_graph(x, bp).graph;
}

cf::LabelMethod label_method(const std::string& m) {
  if (m == "theorem1") return cf::LabelMethod::Theorem1;
  if (m == "exact") return cf::LabelMethod::Exact;
  return cf::LabelMethod::Greedy;
}

// ---- verbs ----------------------------------------------------------------

struct BuildArgs {
  std::string from;
  int m = 1, n = 1, k = 1;
  std::optional<std::uint64_t> seed;
};

int run_build(const Options& o, const BuildArgs& a) {
  json out;
  if (a.from == "edges") {
    out = cf::io::to_json(load_median(o));
  } else if (a.from == "walls") {
    auto w = cf::io::wallspace_from_json(cf::io::read_file(o.input));
    auto d = cf::dual_cube_complex(w, o.max_orientations);
    out = cf::io::to_json(d.graph);
    out["point_vertex"] = d.point_vertex;
  } else if (a.from == "simplex") {
    auto g = cf::io::graph_from_json(cf::io::read_file(o.input));
    std::vector<std::vector<int>> cliques;
    auto s = cf::simplex_graph(g, &cliques);
    out = cf::io::to_json(s);
    out["cliques"] = cliques;
  } else if (a.from == "boxes") {
    auto b = cf::io::boxes_from_json(cf::io::read_file(o.input));
    auto l = cf::lifted_complex(b);
    out = cf::io::to_json(l.graph);
    out["alpha"] = l.alpha;
    out["beta"] = l.beta;
  } else if (a.from == "events") {
    auto es = cf::io::event_structure_from_json(cf::io::read_file(o.input));
    auto d = cf::domain(es, o.max_vertices);
    out = cf::io::to_json(d.graph);
    json confs = json::array();
    for (const auto& c : d.configurations) {
      json set = json::array();
      for (auto e = c.find_first(); e != cf::Bitset::npos; e = c.find_next(e)) set.push_back(e);
      confs.push_back(set);
    }
    out["configurations"] = confs;
  } else if (a.from == "grid") {
    out = cf::io::to_json(cf::grid(a.m, a.n));
  } else if (a.from == "path") {
    out = cf::io::to_json(cf::path(a.n));
  } else if (a.from == "staircase") {
    out = cf::io::to_json(cf::staircase(a.k));
  } else if (a.from == "random") {
    std::uint64_t seed = a.seed ? *a.seed : cf::seed_from_env(7);
    out = cf::io::to_json(cf::random_square_complex(seed, static_cast<int>(std::min<std::size_t>(o.max_vertices, 150))));
  } else if (a.from == "burling") {
    auto l = cf::lifted_complex(cf::burling(a.n, o.oracle_budget));
    out = cf::io::to_json(l.graph);
    out["alpha"] = l.alpha;
    out["beta"] = l.beta;
  }
  if (out.contains("vertices") && out["vertices"].size() > o.max_vertices)
    throw cf::Error(cf::ErrorKind::BudgetExceeded, "result exceeds --max-vertices");
  emit(o, out);
  return kOk;
}

int run_hyperplanes(const Options& o) {
  cf::Complex x(load_median(o));
  emit(o, json{{"num_hyperplanes", x.num_hyperplanes()}, {"hyperplanes", cf::io::hyperplanes_json(x)}});
  return kOk;
}

int run_contact_graph(const Options& o, std::optional<int> pointed, bool dot) {
  cf::Complex x(load_median(o));
  cf::ContactGraph c;
  if (pointed) {
    if (!x.graph().has_vertex(*pointed)) throw cf::Error(cf::ErrorKind::UnknownVertex, std::to_string(*pointed));
    c = cf::pointed_contact_graph(x, *pointed);
  } else {
    c = cf::contact_graph(x);
  }
  if (dot)
    emit(o, cf::io::contact_graph_dot(c));
  else
    emit(o, cf::io::contact_graph_json(c));
  return kOk;
}

int run_colour(const Options& o, const std::string& method, const std::string& which,
               std::optional<int> basepoint) {
  cf::Complex x(load_median(o));
  cf::Graph g = select_graph(x, which, basepoint);
  cf::Colouring c;
  if (method == "theorem1") {
    c = cf::colour_contact_graph(x).colouring;
  } else if (method == "exact") {
    cf::exact_chromatic_number(g, &c, o.oracle_budget);
  } else {
    c = cf::greedy_colour(g);
  }
  const bool proper = cf::verify_colouring(g, c);
  json j = cf::io::colouring_json(method, c, proper, x.graph().max_degree());
  j["graph"] = which;
  emit(o, j);
  return proper ? kOk : kFailed;
}

int run_embed(const Options& o, const std::string& colouring_file, const std::string& out_dir) {
  cf::Complex x(load_median(o));
  cf::Colouring c;
  if (colouring_file.empty())
    c = cf::tau_upper(x, o.oracle_budget).colouring;
  else
    c = cf::io::colouring_from_json(cf::io::read_file(colouring_file), x.num_hyperplanes());
  auto factors = cf::embed_in_trees(x, c);
  auto rep = cf::verify_isometry(x, factors);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      json t = cf::io::to_json(factors[i].tree);
      t["colour"] = factors[i].colour;
      t["walls"] = factors[i].walls;
      t["vertex_map"] = factors[i].vertex_map;
      cf::io::write_file(out_dir + "/tree_" + std::to_string(i) + ".json", cf::io::dump(t));
    }
  }
  emit(o, cf::io::to_json(factors, rep));
  std::cerr << "factors: " << factors.size() << "\nisometric: " << (rep.ok ? "true" : "false") << "\n";
  return rep.ok ? kOk : kFailed;
}

cf::Graph target_graph(const cf::Complex& x, const std::string& alpha_file, std::optional<int> pointed) {
  if (!alpha_file.empty()) return cf::io::graph_from_json(cf::io::read_file(alpha_file));
  int bp = pointed ? *pointed : x.graph().basepoint.value_or(0);
  if (!x.graph().has_vertex(bp)) throw cf::Error(cf::ErrorKind::UnknownVertex, std::to_string(bp));
  return cf::pointed_contact_graph(x, bp).graph;
}

int run_recubulate(const Options& o, const std::string& alpha_file, std::optional<int> pointed) {
  cf::Complex x(load_median(o));
  auto r = cf::recubulate(x, target_graph(x, alpha_file, pointed), o.max_orientations);
  emit(o, cf::io::to_json(r));
  return kOk;
}

int run_burling(const Options& o, int n) {
  auto b = cf::burling(n, o.oracle_budget);
  auto ig = b.intersection_graph();
  json j = cf::io::to_json(b);
  j["omega"] = cf::max_clique(ig);
  j["chi"] = cf::exact_chromatic_number(ig, nullptr, o.oracle_budget);
  emit(o, j);
  return kOk;
}

int run_theorem2(const Options& o, int n, int chain_k) {
  if (chain_k > 0) {
    std::vector<int> block;
    auto g = cf::chain(chain_k, &block);
    json j = cf::io::to_json(g);
    j["block_of_vertex"] = block;
    emit(o, j);
    return kOk;
  }
  auto t = cf::theorem2_family(n, o.max_orientations);
  json j = cf::io::to_json(t.rec.graph);
  j["alpha"] = t.alpha;
  j["beta"] = t.beta;
  j["dimension"] = t.rec.dimension;
  j["max_degree"] = t.rec.graph.max_degree();
  j["lifted_vertices"] = t.lifted.graph.num_vertices();
  emit(o, j);
  return kOk;
}

int run_nice_label(const Options& o, const std::string& method) {
  auto es = cf::io::event_structure_from_json(cf::io::read_file(o.input));
  auto l = cf::nice_label(es, label_method(method), o.oracle_budget);
  json j = cf::io::labeling_json(l);
  j["degree"] = es.degree();
  emit(o, j);
  return kOk;
}

struct VerifyArgs {
  std::string check;
  std::string colouring;
  std::string alpha;
  std::string graph = "contact";
  std::optional<int> basepoint;
};

int run_verify(const Options& o, const VerifyArgs& a) {
  json rep{{"check", a.check}};
  bool ok = true;
  if (a.check == "median") {
    if (o.input.empty()) throw cf::Error(cf::ErrorKind::InvalidInput, "--input is required");
    auto g = cf::io::median_graph_from_json(cf::io::read_file(o.input));
    auto m = cf::is_median_graph(g);
    ok = m.ok;
    if (!ok) {
      rep["reason"] = m.reason;
      if (m.triple) rep["triple"] = *m.triple;
    }
  } else {
    cf::Complex x(load_median(o));
    if (a.check == "colouring") {
      if (a.colouring.empty()) throw cf::Error(cf::ErrorKind::InvalidInput, "--colouring is required");
      auto g = select_graph(x, a.graph, a.basepoint);
      auto c = cf::io::colouring_from_json(cf::io::read_file(a.colouring), x.num_hyperplanes());
      auto bad = cf::improper_edge(g, c);
      ok = !bad;
      if (bad) rep["improper_edge"] = {bad->first, bad->second};
      rep["num_colours"] = cf::palette_size(c);
    } else if (a.check == "isometry") {
      cf::Colouring c = a.colouring.empty()
                            ? cf::tau_upper(x, o.oracle_budget).colouring
                            : cf::io::colouring_from_json(cf::io::read_file(a.colouring), x.num_hyperplanes());
      try {
        auto factors = cf::embed_in_trees(x, c);
        auto r = cf::verify_isometry(x, factors);
        ok = r.ok;
        rep["num_factors"] = factors.size();
        if (r.counterexample) rep["counterexample"] = {r.counterexample->first, r.counterexample->second};
      } catch (const cf::Error& e) {
        if (e.kind() != cf::ErrorKind::ClassNotLaminar) throw;
        ok = false;
        rep["reason"] = e.what();
      }
    } else if (a.check == "cluster-diameter" || a.check == "weak-combing") {
      if (cf::dimension(x) > 2) throw cf::Error(cf::ErrorKind::NotTwoDimensional, "complex has dimension above 2");
      if (x.num_hyperplanes() == 0) throw cf::Error(cf::ErrorKind::InvalidInput, "complex has no hyperplanes");
      cf::Geometry geo(x);
      auto gr = cf::grade(geo.gamma().graph, 0);
      if (a.check == "cluster-diameter") {
        int d = cf::max_cluster_diameter(geo.gamma().graph, gr);
        rep["max_cluster_diameter"] = d;
        ok = d <= 5;
      } else {
        cf::CanonicalPaths cp(geo, gr);
        auto v = cf::check_weak_combing(geo, gr, cp);
        rep["violations"] = v.size();
        ok = v.empty();
      }
    } else if (a.check == "degree-bound") {
      std::vector<int> bad;
      for (int v = 0; v < x.graph().num_vertices(); ++v)
        if ((!a.basepoint || *a.basepoint == v) && !cf::check_degree_bound(x, v)) bad.push_back(v);
      ok = bad.empty();
      if (!ok) rep["failing_basepoints"] = bad;
    } else if (a.check == "recubulation") {
      try {
        auto r = cf::recubulate(x, target_graph(x, a.alpha, a.basepoint), o.max_orientations);
        rep["max_degree"] = r.graph.max_degree();
        rep["dimension"] = r.dimension;
      } catch (const cf::Error& e) {
        if (e.kind() != cf::ErrorKind::PostconditionFailed) throw;
        ok = false;
        rep["reason"] = e.what();
      }
    }
  }
  rep["ok"] = ok;
  emit(o, rep);
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubeforest: median graphs, contact graphs and their colourings"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "input JSON file");
    sub->add_option("-o,--output", o.output, "output file (default stdout)");
    sub->add_option("--max-vertices", o.max_vertices, "vertex budget for inputs and domains");
    sub->add_option("--max-orientations", o.max_orientations, "orientation budget for dual complexes");
    sub->add_option("--oracle-budget", o.oracle_budget, "node budget for exact searches");
  };

  BuildArgs build;
  auto* b = app.add_subcommand("build", "build a median graph");
  add_common(b);
  b->add_option("--from", build.from, "source kind")
      ->required()
      ->check(CLI::IsMember({"edges", "walls", "simplex", "boxes", "events", "grid", "path", "staircase",
                             "random", "burling"}));
  b->add_option("-m", build.m, "grid rows");
  b->add_option("-n", build.n, "grid columns, path length or burling level");
  b->add_option("-k", build.k, "staircase size");
  b->add_option("--seed", build.seed, "seed for --from random");

  auto* hyp = app.add_subcommand("hyperplanes", "list hyperplanes");
  add_common(hyp);

  std::optional<int> pointed;
  bool dot = false;
  auto* cg = app.add_subcommand("contact-graph", "contact graph of a complex");
  add_common(cg);
  cg->add_option("--pointed", pointed, "pointed contact graph at this vertex");
  cg->add_flag("--dot", dot, "emit Graphviz text");

  std::string method = "theorem1", which = "contact";
  std::optional<int> basepoint;
  auto* col = app.add_subcommand("colour", "colour a hyperplane graph");
  add_common(col);
  col->add_option("--method", method)->check(CLI::IsMember({"theorem1", "greedy", "exact"}));
  col->add_option("--graph", which)->check(CLI::IsMember({"contact", "crossing", "pointed"}));
  col->add_option("--basepoint", basepoint, "basepoint for --graph pointed");

  std::string colouring_file, out_dir;
  auto* emb = app.add_subcommand("embed-trees", "embed into a product of trees");
  add_common(emb);
  emb->add_option("--colouring", colouring_file, "colouring JSON of the crossing graph");
  emb->add_option("--out-dir", out_dir, "write one tree file per factor here");

  std::string alpha_file;
  auto* rec = app.add_subcommand("recubulate", "recubulate along a contact subgraph");
  add_common(rec);
  rec->add_option("--alpha", alpha_file, "graph JSON on the hyperplanes");
  rec->add_option("--pointed", pointed, "use the pointed contact graph at this vertex");

  int level = 1;
  auto* bur = app.add_subcommand("burling", "certified Burling box family");
  add_common(bur);
  bur->add_option("-n", level)->required();

  int chain_k = 0;
  auto* t2 = app.add_subcommand("theorem2", "recubulated lifted Burling complex");
  add_common(t2);
  t2->add_option("-n", level);
  t2->add_option("--chain", chain_k, "wedge X_1..X_k instead");

  std::string label = "greedy";
  auto* nl = app.add_subcommand("nice-label", "nice labeling of an event structure");
  add_common(nl);
  nl->add_option("--method", label)->check(CLI::IsMember({"theorem1", "greedy", "exact"}));

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run one check");
  add_common(ver);
  ver->add_option("--check", va.check)
      ->required()
      ->check(CLI::IsMember({"median", "colouring", "isometry", "cluster-diameter", "weak-combing",
                             "degree-bound", "recubulation"}));
  ver->add_option("--colouring", va.colouring);
  ver->add_option("--alpha", va.alpha);
  ver->add_option("--graph", va.graph)->check(CLI::IsMember({"contact", "crossing", "pointed"}));
  ver->add_option("--basepoint", va.basepoint);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*b) return run_build(o, build);
    if (*hyp) return run_hyperplanes(o);
    if (*cg) return run_contact_graph(o, pointed, dot);
    if (*col) return run_colour(o, method, which, basepoint);
    if (*emb) return run_embed(o, colouring_file, out_dir);
    if (*rec) return run_recubulate(o, alpha_file, pointed);
    if (*bur) return run_burling(o, level);
    if (*t2) return run_theorem2(o, level, chain_k);
    if (*nl) return run_nice_label(o, label);
    if (*ver) return run_verify(o, va);
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

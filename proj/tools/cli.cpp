#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sbrokit/applications.hpp"
#include "sbrokit/catalog.hpp"
#include "sbrokit/circuit_cover.hpp"
#include "sbrokit/covering.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/io.hpp"
#include "sbrokit/minors.hpp"
#include "sbrokit/orderability.hpp"

namespace sbrokit::cli {

namespace {

using Json = nlohmann::ordered_json;

Json set_json(ElementSet s) { return s.to_vector(); }

Json sets_json(const std::vector<ElementSet>& sets) {
  Json out = Json::array();
  for (ElementSet s : sets) out.push_back(set_json(s));
  return out;
}

Json pair_json(std::pair<ElementSet, ElementSet> p) {
  return Json::array({set_json(p.first), set_json(p.second)});
}

Json edges_json(const std::vector<std::pair<int, int>>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

Json graph_json(const CoverGraph& g) {
  Json out;
  out["shape"] = to_string(g.shape);
  out["vertices"] = set_json(g.vertices);
  out["edges"] = edges_json(g.edges);
  if (!g.doubled.empty()) out["doubled"] = edges_json(g.doubled);
  return out;
}

Json partition_json(const Partition& p) {
  Json out;
  out["tag"] = to_string(p.tag);
  out["parts"] = sets_json(p.parts);
  return out;
}

Json exchange_json(const ExchangeWitness& w) {
  Json out;
  out["a_prime"] = set_json(w.a_prime);
  out["b_prime"] = set_json(w.b_prime);
  out["bijection"] = edges_json(w.bijection);
  if (w.exchange_bound) out["exchange_bound"] = *w.exchange_bound;
  return out;
}

Json stats_json(const SearchStats& s) {
  Json out;
  out["oracle_queries"] = s.oracle_queries;
  out["nodes"] = s.nodes;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A path, or "catalog:NAME".
Matroid load_matroid(const std::string& source) {
  if (source.starts_with("catalog:")) return catalog_get(source.substr(8));
  try {
    return parse_matroid(read_file(source));
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

// {"vertices": [...], "edges": [[u, v], ...]}; vertices default to the
// endpoints.
CoverGraph load_graph(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": at byte " + std::to_string(e.byte) +
                     ": malformed JSON");
  }
  auto bad = [&](const std::string& what) {
    throw InputError(path + ": " + what);
  };
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    bad("at /: expected {\"edges\": [[u, v], ...]}");
  }
  auto element = [&](const Json& v, const std::string& at) {
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<long long>() >= kMaxElements) {
      bad("at " + at + ": expected an element 0..63");
    }
    return v.get<int>();
  };
  CoverGraph g;
  const Json& edges = doc["edges"];
  for (size_t i = 0; i < edges.size(); ++i) {
    std::string at = "/edges/" + std::to_string(i);
    if (!edges[i].is_array() || edges[i].size() != 2) bad("at " + at + ": expected [u, v]");
    int u = element(edges[i][0], at + "/0");
    int v = element(edges[i][1], at + "/1");
    if (u == v) bad("at " + at + ": loop");
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
    g.vertices = g.vertices.with(u).with(v);
  }
  if (doc.contains("vertices")) {
    const Json& vs = doc["vertices"];
    if (!vs.is_array()) bad("at /vertices: expected an array");
    for (size_t i = 0; i < vs.size(); ++i) {
      g.vertices = g.vertices.with(element(vs[i], "/vertices/" + std::to_string(i)));
    }
  }
  return g;
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::found:
      return kHolds;
    case Verdict::none:
      return kFails;
    case Verdict::unknown:
      return kUnknown;
  }
  return kInternal;
}

int class_code(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::holds:
      return kHolds;
    case ClassVerdict::fails:
      return kFails;
    case ClassVerdict::unknown:
      return kUnknown;
  }
  return kInternal;
}

bool is_cover_property(const std::string& p) {
  return p == "r" || p == "rplus" || p == "r+" || p == "p" || p == "pplus" ||
         p == "p+";
}

// Graph of the requested shape derived from a constructed P+ path: the
// path itself serves (P), closing it gives an alternating cycle (R+) and a
// 2-regular graph (R).
CoverGraph shape_from_path(const PathWitness& path, CoverProperty prop) {
  switch (prop) {
    case CoverProperty::p_plus:
      return path.graph(true);
    case CoverProperty::p:
      return path.graph(false);
    case CoverProperty::r_plus: {
      CoverGraph g = close_path(path);
      g.shape = CoverShape::alternating_two_regular;
      return g;
    }
    case CoverProperty::r:
      return close_path(path);
  }
  return {};
}

struct Options {
  uint64_t budget = kDefaultBudget;
  bool timing = false;
  int indent = 2;
};

class Runner {
 public:
  Runner(const std::vector<std::string>& args, std::ostream& out)
      : args_(args), out_(out) {}

  Options opts;

  // Starts the report for a command.
  Json& begin() {
    report_ = Json();
    report_["schema"] = kSchemaVersion;
    report_["command"] = args_;
    start_ = std::chrono::steady_clock::now();
    return report_;
  }

  int finish(int code, Json stats = Json::object()) {
    if (opts.timing) {
      auto elapsed = std::chrono::steady_clock::now() - start_;
      stats["wall_ms"] =
          std::chrono::duration<double, std::milli>(elapsed).count();
    }
    report_["stats"] = std::move(stats);
    report_["exit_code"] = code;
    out_ << report_.dump(opts.indent) << "\n";
    return code;
  }

  int catalog_list() {
    Json& r = begin();
    r["verdict"] = "ok";
    Json entries = Json::array();
    for (const CatalogEntry& e : catalog_entries()) {
      Json j;
      j["name"] = e.name;
      j["size"] = e.size;
      j["rank"] = e.rank;
      if (e.bases >= 0) j["bases"] = e.bases;
      j["description"] = e.description;
      entries.push_back(std::move(j));
    }
    r["entries"] = std::move(entries);
    return finish(kHolds);
  }

  int catalog_show(const std::string& name, bool check) {
    CatalogEntry e = catalog_entry(name);
    Matroid m = catalog_get(name);
    Json& r = begin();
    r["verdict"] = "ok";
    r["name"] = e.name;
    r["description"] = e.description;
    r["size"] = m.size();
    r["rank"] = m.rank();
    if (e.bases >= 0) r["bases"] = e.bases;
    Json labels = Json::array();
    for (int i = 0; i < m.size(); ++i) labels.push_back({i, m.label(i)});
    r["labels"] = std::move(labels);
    r["document"] = Json::parse(serialize_matroid(m));
    int code = kHolds;
    if (check) {
      SelfCheckReport sc = self_check(name);
      Json j;
      j["passed"] = sc.passed;
      j["facts"] = sc.facts;
      j["mismatches"] = sc.mismatches;
      r["self_check"] = std::move(j);
      if (!sc.passed) code = kFails;
    }
    return finish(code);
  }

  int rank(const std::string& file, const std::string& set) {
    Matroid m = load_matroid(file);
    ElementSet x = parse_csv_set(set);
    m.check_subset(x);
    Json& r = begin();
    r["verdict"] = "ok";
    r["set"] = set_json(x);
    r["rank"] = m.rank(x);
    return finish(kHolds);
  }

  int beta(const std::string& file) {
    Matroid m = load_matroid(file);
    int b = covering_number(m);
    auto p = find_partition(m, b);
    if (!p) throw TheoremViolation("no partition into beta independent sets");
    Json& r = begin();
    r["verdict"] = "found";
    r["value"] = b;
    r["witness"] = partition_json(*p);
    return finish(kHolds);
  }

  int beta2(const std::string& f1, const std::string& f2, int max_k) {
    Matroid m1 = load_matroid(f1);
    Matroid m2 = load_matroid(f2);
    if (m1.size() != m2.size()) {
      throw InputError("the two matroids have different ground sets");
    }
    IntersectionCover c =
        covering_number_intersection(m1, m2, opts.budget, max_k);
    Json& r = begin();
    r["verdict"] = to_string(c.verdict);
    if (c.verdict == Verdict::found) r["value"] = c.value;
    r["beta1"] = covering_number(m1);
    r["beta2"] = covering_number(m2);
    r["refuted_below"] = c.refuted_below;
    if (c.partition) r["witness"] = partition_json(*c.partition);
    return finish(verdict_code(c.verdict), stats_json(c.stats));
  }

  int check(const std::string& file, const std::string& property,
            const std::optional<std::string>& pair) {
    Matroid m = load_matroid(file);
    if (is_cover_property(property)) {
      return check_cover(m, parse_cover_property(property), pair);
    }
    ExchangeProperty prop = ExchangeProperty::parse(property);
    if (pair) {
      auto [a, b] = parse_csv_pair(*pair);
      auto res = find_exchange_witness(m, a, b, prop, opts.budget);
      Json& r = begin();
      r["verdict"] = to_string(res.verdict);
      r["property"] = prop.to_string();
      r["pair"] = pair_json({a, b});
      if (res.witness) {
        r["witness"] = exchange_json(*res.witness);
        r["verified"] = verify_witness(m, a, b, *res.witness);
      }
      return finish(verdict_code(res.verdict), stats_json(res.stats));
    }
    ClassCheck c = check_class(m, prop, opts.budget, PairOrder::disjoint_first);
    Json& r = begin();
    r["verdict"] = to_string(c.verdict);
    r["property"] = prop.to_string();
    class_fields(r, c);
    return finish(class_code(c.verdict), class_stats(c));
  }

  int check_cover(const Matroid& m, CoverProperty prop,
                  const std::optional<std::string>& pair) {
    if (pair) {
      auto [a, b] = parse_csv_pair(*pair);
      auto res = find_cover_graph(m, a, b, prop, opts.budget);
      Json& r = begin();
      r["verdict"] = to_string(res.verdict);
      r["property"] = to_string(prop);
      r["pair"] = pair_json({a, b});
      if (res.witness) {
        r["witness"] = graph_json(*res.witness);
        r["verified"] = covers_pair(m, a, b, *res.witness);
      }
      return finish(verdict_code(res.verdict), stats_json(res.stats));
    }
    ClassCheck c = check_cover_class(m, prop, opts.budget);
    Json& r = begin();
    r["verdict"] = to_string(c.verdict);
    r["property"] = to_string(prop);
    class_fields(r, c);
    return finish(class_code(c.verdict), class_stats(c));
  }

  int cover(const std::string& file, const std::string& pair,
            const std::string& shape, const std::optional<std::string>& how) {
    Matroid m = load_matroid(file);
    auto [a, b] = parse_csv_pair(pair);
    CoverProperty prop = parse_cover_property(shape);
    Json& r = begin();
    if (!how) {
      auto res = find_cover_graph(m, a, b, prop, opts.budget);
      r["verdict"] = to_string(res.verdict);
      r["property"] = to_string(prop);
      r["pair"] = pair_json({a, b});
      r["construction"] = "search";
      if (res.witness) {
        r["witness"] = graph_json(*res.witness);
        r["verified"] = covers_pair(m, a, b, *res.witness);
      }
      return finish(verdict_code(res.verdict), stats_json(res.stats));
    }
    Construction c = parse_construction(*how);
    PathWitness path;
    try {
      path = construct_pp_path(m, a, b, c, opts.budget);
    } catch (const BudgetExceeded&) {
      r["verdict"] = "unknown";
      r["property"] = to_string(prop);
      r["pair"] = pair_json({a, b});
      r["construction"] = to_string(c);
      return finish(kUnknown);
    }
    CoverGraph g = shape_from_path(path, prop);
    r["verdict"] = "found";
    r["property"] = to_string(prop);
    r["pair"] = pair_json({a, b});
    r["construction"] = to_string(c);
    r["path"] = path.sequence;
    r["witness"] = graph_json(g);
    r["verified"] = covers_pair(m, a, b, g);
    return finish(kHolds);
  }

  int decompose(const std::string& f1, const std::string& f2) {
    Matroid m1 = load_matroid(f1);
    Matroid m2 = load_matroid(f2);
    if (m1.size() != m2.size()) {
      throw InputError("the two matroids have different ground sets");
    }
    try {
      CommonDecomposition d = decompose_common_sbro(m1, m2);
      Json& r = begin();
      r["verdict"] = "found";
      r["value"] = d.k;
      r["rounds"] = d.rounds;
      r["potentials"] = d.potentials;
      r["padded_size"] = d.padded_size;
      r["witness"] = partition_json(d.partition);
      return finish(kHolds);
    } catch (const NotSbroError& e) {
      Json& r = begin();
      r["verdict"] = "none";
      r["reason"] = "no sbro witness";
      r["matroid"] = e.matroid_index();
      r["pair"] = pair_json(e.pair());
      return finish(kFails);
    }
  }

  int minor(const std::string& host_file, const std::string& pattern_file) {
    Matroid host = load_matroid(host_file);
    Matroid pattern = load_matroid(pattern_file);
    auto res = has_minor(host, pattern, opts.budget);
    Json& r = begin();
    r["verdict"] = to_string(res.verdict);
    if (res.witness) {
      Json w;
      w["contract"] = set_json(res.witness->contract);
      w["delete"] = set_json(res.witness->del);
      w["map"] = res.witness->map;
      r["witness"] = std::move(w);
      r["verified"] = verify_minor_witness(host, pattern, *res.witness);
    }
    return finish(verdict_code(res.verdict), stats_json(res.stats));
  }

  int iso(const std::string& f1, const std::string& f2) {
    Matroid m1 = load_matroid(f1);
    Matroid m2 = load_matroid(f2);
    auto map = are_isomorphic(m1, m2);
    Json& r = begin();
    r["verdict"] = map ? "found" : "none";
    if (map) {
      Json w;
      w["map"] = *map;
      r["witness"] = std::move(w);
      r["verified"] = is_isomorphism(m1, m2, *map);
    }
    return finish(map ? kHolds : kFails);
  }

  int order(const std::string& file, const std::string& pair,
            const std::string& how) {
    Matroid m = load_matroid(file);
    auto [a, b] = parse_csv_pair(pair);
    PathWitness path =
        construct_pp_path(m, a, b, parse_construction(how), opts.budget);
    CyclicOrdering o = weak_cyclic_ordering(m, a, b, path);
    CyclicCheck c = check_cyclic_ordering(m, o);
    Json& r = begin();
    r["verdict"] = c.ok() ? "found" : "none";
    r["pair"] = pair_json({a, b});
    r["path"] = path.sequence;
    Json seq = Json::array();
    for (OrderedCopy x : o.sequence) seq.push_back({x.element, x.copy});
    Json w;
    w["rank"] = o.rank;
    w["sequence"] = std::move(seq);
    r["witness"] = std::move(w);
    Json checks;
    checks["a_intervals_bases"] = c.a_intervals_bases;
    checks["b_intervals_near_bases"] = c.b_intervals_near_bases;
    checks["repairable"] = c.repairable;
    checks["b_interval_ranks"] = c.b_interval_ranks;
    r["checks"] = std::move(checks);
    return finish(c.ok() ? kHolds : kFails);
  }

  int color_partition(const std::string& f1, const std::string& f2,
                      const std::string& shape, int k, const std::string& how) {
    Matroid m1 = load_matroid(f1);
    Matroid m2 = load_matroid(f2);
    CoverProperty prop = parse_cover_property(shape);
    CoverGraph w =
        shape_from_path(ground_cover_path(m1, parse_construction(how)), prop);
    if (k <= 0) k = min_parts_for(w.shape);
    Partition p = color_cover_plus_partition(w, m2, k);
    Json& r = begin();
    r["verdict"] = "found";
    r["k"] = k;
    r["value"] = static_cast<int>(p.parts.size());
    r["graph"] = graph_json(w);
    r["witness"] = partition_json(p);
    return finish(kHolds);
  }

  int color_greedy(const std::string& f1, const std::string& f2,
                   const std::string& how) {
    Matroid m1 = load_matroid(f1);
    Matroid m2 = load_matroid(f2);
    CoverGraph w = ground_cover_path(m1, parse_construction(how)).graph(true);
    GreedyColoring g = greedy_color(w, m2);
    int k = 0;
    bool exact = true;
    SearchStats stats;
    for (int e = 0; e < m2.size(); ++e) {
      SpannedPacking s = max_spanned(m2, e, opts.budget);
      k = std::max(k, s.value);
      exact = exact && s.verdict == Verdict::found;
      stats.nodes += s.stats.nodes;
    }
    Json& r = begin();
    r["verdict"] = "found";
    r["value"] = g.colors;
    r["max_spanned"] = k;
    r["max_spanned_exact"] = exact;
    r["bound"] = k + 1;
    r["graph"] = graph_json(w);
    r["witness"] = partition_json(g.partition);
    return finish(kHolds, stats_json(stats));
  }

  int color_multi(const std::vector<std::string>& files,
                  const std::string& how) {
    std::vector<Matroid> ms;
    std::vector<CoverGraph> ws;
    for (const std::string& f : files) {
      ms.push_back(load_matroid(f));
      ws.push_back(close_path(ground_cover_path(ms.back(), parse_construction(how))));
    }
    Partition p = color_q_matroids(ms, ws);
    Json& r = begin();
    r["verdict"] = "found";
    r["q"] = static_cast<int>(ms.size());
    r["value"] = static_cast<int>(p.parts.size());
    r["bound"] = 2 * static_cast<int>(ms.size()) + 1;
    Json graphs = Json::array();
    for (const CoverGraph& w : ws) graphs.push_back(graph_json(w));
    r["graphs"] = std::move(graphs);
    r["witness"] = partition_json(p);
    return finish(kHolds);
  }

  int bound(const std::string& file, const std::string& graph_file) {
    Matroid m = load_matroid(file);
    CoverGraph g = load_graph(graph_file);
    EdgeBoundReport e = edge_lower_bound_check(m, g);
    Json& r = begin();
    r["verdict"] = e.holds() ? "holds" : "fails";
    r["beta"] = e.beta;
    r["rank"] = e.rank;
    r["ground"] = e.ground;
    r["edges"] = e.edges;
    r["alpha"] = e.alpha;
    r["edge_bound"] = e.bound;
    r["alpha_ok"] = e.alpha_ok;
    r["edges_ok"] = e.edges_ok;
    return finish(e.holds() ? kHolds : kFails);
  }

 private:
  static void class_fields(Json& r, const ClassCheck& c) {
    r["bases"] = c.bases;
    r["pairs_total"] = c.pairs_total;
    r["pairs_checked"] = c.pairs_checked;
    if (c.counterexample) r["counterexample"] = pair_json(*c.counterexample);
    if (c.unresolved_pair) r["unresolved_pair"] = pair_json(*c.unresolved_pair);
  }

  static Json class_stats(const ClassCheck& c) {
    Json s = stats_json(c.stats);
    s["pairs_searched"] = c.pairs_searched;
    s["max_per_pair"] = c.max_queries_per_pair;
    return s;
  }

  const std::vector<std::string>& args_;
  std::ostream& out_;
  Json report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Runner runner(args, out);
  CLI::App app{"Matroid covering and exchange toolkit", "sbrokit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  app.add_option("--budget", runner.opts.budget,
                 "Search budget (oracle queries or nodes) per search");
  app.add_flag("--timing", runner.opts.timing, "Add wall time to the stats");
  app.add_option("--indent", runner.opts.indent,
                 "JSON indentation; -1 for one line");

  std::function<int()> action;
  std::string file, file2, set, pair, property, shape, name;
  std::optional<std::string> opt_pair, construct;
  std::string how = "auto";
  std::vector<std::string> files;
  int max_k = 64;
  int k = 0;
  bool check_flag = false;

  auto* catalog = app.add_subcommand("catalog", "Named matroids");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List the catalog")->callback([&] {
    action = [&] { return runner.catalog_list(); };
  });
  auto* show = catalog->add_subcommand("show", "Show one entry");
  show->add_option("name", name, "Entry name")->required();
  show->add_flag("--self-check", check_flag, "Run the entry's self-checks");
  show->callback([&] {
    action = [&] { return runner.catalog_show(name, check_flag); };
  });

  auto* rank = app.add_subcommand("rank", "Rank of a set");
  rank->add_option("file", file, "Matroid document")->required();
  rank->add_option("--set", set, "Elements, comma separated")->required();
  rank->callback([&] { action = [&] { return runner.rank(file, set); }; });

  auto* beta = app.add_subcommand("beta", "Covering number");
  beta->add_option("file", file, "Matroid document")->required();
  beta->callback([&] { action = [&] { return runner.beta(file); }; });

  auto* beta2 = app.add_subcommand("beta2", "Covering number of an intersection");
  beta2->add_option("file1", file, "First matroid")->required();
  beta2->add_option("file2", file2, "Second matroid")->required();
  beta2->add_option("--max", max_k, "Largest k to try");
  beta2->add_option("--budget", runner.opts.budget, "Node budget");
  beta2->callback([&] {
    action = [&] { return runner.beta2(file, file2, max_k); };
  });

  auto* check = app.add_subcommand("check", "Exchange or cover property");
  check->add_option("file", file, "Matroid document")->required();
  check->add_option("--property", property,
                    "sbo, bo, kbo:K, sbro, r, rplus, p or pplus")
      ->required();
  check->add_option("--pair", opt_pair, "Basis pair A;B (else every pair)");
  check->add_option("--budget", runner.opts.budget, "Budget per pair");
  check->callback([&] {
    action = [&] { return runner.check(file, property, opt_pair); };
  });

  auto* cover = app.add_subcommand("cover", "Cover graph for a basis pair");
  cover->add_option("file", file, "Matroid document")->required();
  cover->add_option("--pair", pair, "Basis pair A;B")->required();
  cover->add_option("--shape", shape, "pplus, p, rplus or r")->required();
  cover->add_option("--construct", construct,
                    "auto, graphic, paving, spike or search (else exhaustive)");
  cover->add_option("--budget", runner.opts.budget, "Search budget");
  cover->callback([&] {
    action = [&] { return runner.cover(file, pair, shape, construct); };
  });

  auto* decompose =
      app.add_subcommand("decompose", "Common independent decomposition");
  decompose->add_option("file1", file, "First matroid")->required();
  decompose->add_option("file2", file2, "Second matroid")->required();
  decompose->callback([&] {
    action = [&] { return runner.decompose(file, file2); };
  });

  auto* minor = app.add_subcommand("minor", "Minor containment");
  minor->add_option("host", file, "Host matroid")->required();
  minor->add_option("pattern", file2, "Pattern matroid")->required();
  minor->add_option("--budget", runner.opts.budget, "Isomorphism tests");
  minor->callback([&] { action = [&] { return runner.minor(file, file2); }; });

  auto* iso = app.add_subcommand("iso", "Isomorphism");
  iso->add_option("file1", file, "First matroid")->required();
  iso->add_option("file2", file2, "Second matroid")->required();
  iso->callback([&] { action = [&] { return runner.iso(file, file2); }; });

  auto* order = app.add_subcommand("order", "Weak cyclic ordering");
  order->add_option("file", file, "Matroid document")->required();
  order->add_option("--pair", pair, "Basis pair A;B")->required();
  order->add_option("--construct", how, "Path construction");
  order->callback([&] {
    action = [&] { return runner.order(file, pair, how); };
  });

  auto* color = app.add_subcommand("color", "Coloring applications");
  color->require_subcommand(1);
  auto* cpart = color->add_subcommand(
      "partition", "Cover graph of M1 plus partition matroid M2");
  cpart->add_option("file1", file, "M1, two disjoint bases")->required();
  cpart->add_option("file2", file2, "M2, a partition matroid")->required();
  cpart->add_option("--k", k, "Number of colors (default: smallest allowed)");
  cpart->add_option("--shape", shape, "pplus, rplus or r")
      ->default_val("pplus");
  cpart->add_option("--construct", how, "Path construction");
  cpart->callback([&] {
    action = [&] { return runner.color_partition(file, file2, shape, k, how); };
  });
  auto* cgreedy =
      color->add_subcommand("greedy", "Greedy coloring with the span rule");
  cgreedy->add_option("file1", file, "M1, two disjoint bases")->required();
  cgreedy->add_option("file2", file2, "M2")->required();
  cgreedy->add_option("--construct", how, "Path construction");
  cgreedy->add_option("--budget", runner.opts.budget, "Budget per element");
  cgreedy->callback([&] {
    action = [&] { return runner.color_greedy(file, file2, how); };
  });
  auto* cmulti = color->add_subcommand("multi", "Common coloring of q matroids");
  cmulti->add_option("files", files, "Matroids, each two disjoint bases")
      ->required();
  cmulti->add_option("--construct", how, "Path construction");
  cmulti->callback([&] {
    action = [&] { return runner.color_multi(files, how); };
  });

  auto* bound = app.add_subcommand("bound", "Edge lower bound for a cover graph");
  bound->add_option("file", file, "Matroid document")->required();
  bound->add_option("graph", file2, "Graph document")->required();
  bound->callback([&] { action = [&] { return runner.bound(file, file2); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }
  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kUnknown;
  } catch (const TheoremViolation& e) {
    err << "internal: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace sbrokit::cli

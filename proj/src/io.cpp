#include "sbrokit/io.hpp"

#include <charconv>
#include "json.hpp"

#include "sbrokit/catalog.hpp"
#include "sbrokit/derive.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/representations.hpp"

namespace sbrokit {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError("at " + (where.empty() ? std::string("/") : where) + ": " +
                   what);
}

const json& field(const json& node, const char* key, const std::string& at) {
  auto it = node.find(key);
  if (it == node.end()) fail(at, std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const json& v, const std::string& at) {
  if (!v.is_number_integer()) fail(at, "expected an integer");
  long long x = v.get<long long>();
  if (x < -(1LL << 30) || x > (1LL << 30)) fail(at, "integer out of range");
  return static_cast<int>(x);
}

int int_field(const json& node, const char* key, const std::string& at) {
  return as_int(field(node, key, at), at + "/" + key);
}

ElementSet as_set(const json& v, const std::string& at) {
  if (!v.is_array()) fail(at, "expected an array of elements");
  ElementSet s;
  for (size_t i = 0; i < v.size(); ++i) {
    std::string here = at + "/" + std::to_string(i);
    int e = as_int(v[i], here);
    if (e < 0 || e >= kMaxElements) fail(here, "element out of range");
    if (s.contains(e)) fail(here, "repeated element");
    s = s.with(e);
  }
  return s;
}

std::vector<ElementSet> as_sets(const json& v, const std::string& at) {
  if (!v.is_array()) fail(at, "expected an array of sets");
  std::vector<ElementSet> out;
  for (size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_set(v[i], at + "/" + std::to_string(i)));
  }
  return out;
}

std::pair<int, int> as_edge(const json& v, const std::string& at) {
  if (!v.is_array() || v.size() != 2) fail(at, "expected [u, v]");
  return {as_int(v[0], at + "/0"), as_int(v[1], at + "/1")};
}

Matroid parse_node(const json& node, const std::string& at);

Matroid operand(const json& node, const std::string& at) {
  return parse_node(field(node, "of", at), at + "/of");
}

Matroid parse_leaf(const json& node, const std::string& at) {
  const json& t = field(node, "type", at);
  if (!t.is_string()) fail(at + "/type", "expected a string");
  const std::string type = t.get<std::string>();
  if (type == "uniform") {
    return make_uniform(int_field(node, "r", at), int_field(node, "n", at));
  }
  if (type == "linear") {
    int p = int_field(node, "p", at);
    const json& rows = field(node, "matrix", at);
    if (!rows.is_array()) fail(at + "/matrix", "expected an array of rows");
    std::vector<std::vector<int>> matrix;
    for (size_t i = 0; i < rows.size(); ++i) {
      std::string here = at + "/matrix/" + std::to_string(i);
      if (!rows[i].is_array()) fail(here, "expected a row");
      std::vector<int> row;
      for (size_t j = 0; j < rows[i].size(); ++j) {
        row.push_back(as_int(rows[i][j], here + "/" + std::to_string(j)));
      }
      matrix.push_back(std::move(row));
    }
    return make_linear(p, std::move(matrix));
  }
  if (type == "graphic") {
    int vertices = int_field(node, "vertices", at);
    const json& edges = field(node, "edges", at);
    if (!edges.is_array()) fail(at + "/edges", "expected an array of edges");
    std::vector<std::pair<int, int>> list;
    for (size_t i = 0; i < edges.size(); ++i) {
      list.push_back(as_edge(edges[i], at + "/edges/" + std::to_string(i)));
    }
    return make_graphic(vertices, std::move(list));
  }
  if (type == "partition") {
    return make_partition(as_sets(field(node, "classes", at), at + "/classes"));
  }
  if (type == "paving") {
    return make_paving(int_field(node, "r", at), int_field(node, "n", at),
                       as_sets(field(node, "hyperplanes", at),
                               at + "/hyperplanes"));
  }
  if (type == "spike") {
    std::vector<ElementSet> h;
    if (node.contains("transversals")) {
      h = as_sets(node["transversals"], at + "/transversals");
    }
    return make_spike(int_field(node, "r", at), std::move(h));
  }
  if (type == "cyclic_flats") {
    const json& flats = field(node, "flats", at);
    if (!flats.is_array()) fail(at + "/flats", "expected an array");
    std::vector<std::pair<ElementSet, int>> list;
    for (size_t i = 0; i < flats.size(); ++i) {
      std::string here = at + "/flats/" + std::to_string(i);
      if (!flats[i].is_object()) fail(here, "expected {set, rank}");
      list.emplace_back(as_set(field(flats[i], "set", here), here + "/set"),
                        int_field(flats[i], "rank", here));
    }
    return make_cyclic_flats(int_field(node, "r", at), int_field(node, "n", at),
                             std::move(list));
  }
  if (type == "catalog") {
    const json& name = field(node, "name", at);
    if (!name.is_string()) fail(at + "/name", "expected a string");
    return catalog_get(name.get<std::string>());
  }
  fail(at + "/type", "unknown type \"" + type + "\"");
}

Matroid parse_op(const json& node, const std::string& at) {
  const json& o = field(node, "op", at);
  if (!o.is_string()) fail(at + "/op", "expected a string");
  const std::string op = o.get<std::string>();
  if (op == "dual") return dual(operand(node, at));
  if (op == "delete" || op == "contract") {
    Matroid m = operand(node, at);
    ElementSet x = as_set(field(node, "set", at), at + "/set");
    return op == "delete" ? delete_elements(m, x) : contract_elements(m, x);
  }
  if (op == "direct_sum") {
    const json& args = field(node, "args", at);
    if (!args.is_array() || args.size() != 2) {
      fail(at + "/args", "expected two operands");
    }
    return direct_sum(parse_node(args[0], at + "/args/0"),
                      parse_node(args[1], at + "/args/1"));
  }
  if (op == "truncate") {
    return truncate(operand(node, at), int_field(node, "k", at));
  }
  if (op == "principal_extension") {
    return principal_extension(operand(node, at),
                               as_set(field(node, "flat", at), at + "/flat"));
  }
  if (op == "relaxation") {
    return relax(operand(node, at), as_set(field(node, "set", at), at + "/set"));
  }
  fail(at + "/op", "unknown operator \"" + op + "\"");
}

Matroid parse_node(const json& node, const std::string& at) {
  if (!node.is_object()) fail(at, "expected an object");
  if (node.contains("type") == node.contains("op")) {
    fail(at, "expected exactly one of \"type\" and \"op\"");
  }
  Matroid m = [&] {
    try {
      return node.contains("type") ? parse_leaf(node, at) : parse_op(node, at);
    } catch (const InputError& e) {
      if (std::string_view(e.what()).starts_with("at ")) throw;
      fail(at, e.what());
    } catch (const ConstructionError& e) {
      fail(at, e.what());
    }
  }();
  if (node.contains("labels")) {
    const json& labels = node["labels"];
    if (!labels.is_array()) fail(at + "/labels", "expected an array");
    std::vector<std::string> names;
    for (size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string()) {
        fail(at + "/labels/" + std::to_string(i), "expected a string");
      }
      names.push_back(labels[i].get<std::string>());
    }
    try {
      m = m.with_labels(std::move(names));
    } catch (const InputError& e) {
      fail(at + "/labels", e.what());
    }
  }
  return m;
}

ojson set_json(ElementSet s) { return s.to_vector(); }

ojson sets_json(const std::vector<ElementSet>& sets) {
  ojson out = ojson::array();
  for (ElementSet s : sets) out.push_back(set_json(s));
  return out;
}

bool default_labels(const Matroid& m) {
  for (int i = 0; i < m.size(); ++i) {
    if (m.label(i) != std::to_string(i)) return false;
  }
  return true;
}

ojson to_json(const Matroid& m) {
  ojson out;
  const Representation& rep = m.representation();
  switch (rep.kind()) {
    case RepKind::linear: {
      auto& r = static_cast<const LinearRep&>(rep);
      out["type"] = "linear";
      out["p"] = r.prime();
      out["matrix"] = r.matrix();
      break;
    }
    case RepKind::graphic: {
      auto& r = static_cast<const GraphicRep&>(rep);
      out["type"] = "graphic";
      out["vertices"] = r.vertices();
      ojson edges = ojson::array();
      for (auto [u, v] : r.edges()) edges.push_back({u, v});
      out["edges"] = std::move(edges);
      break;
    }
    case RepKind::partition:
      out["type"] = "partition";
      out["classes"] =
          sets_json(static_cast<const PartitionRep&>(rep).classes());
      break;
    case RepKind::uniform:
      out["type"] = "uniform";
      out["r"] = static_cast<const UniformRep&>(rep).rank();
      out["n"] = rep.size();
      break;
    case RepKind::paving: {
      auto& r = static_cast<const PavingRep&>(rep);
      out["type"] = "paving";
      out["r"] = r.rank();
      out["n"] = r.size();
      out["hyperplanes"] = sets_json(r.hyperplanes());
      break;
    }
    case RepKind::spike: {
      auto& r = static_cast<const SpikeRep&>(rep);
      out["type"] = "spike";
      out["r"] = r.rank();
      out["transversals"] = sets_json(r.transversals());
      break;
    }
    case RepKind::cyclic_flats: {
      auto& r = static_cast<const CyclicFlatsRep&>(rep);
      out["type"] = "cyclic_flats";
      out["r"] = r.rank();
      out["n"] = r.size();
      ojson flats = ojson::array();
      for (auto [z, k] : r.flats()) {
        ojson f;
        f["set"] = set_json(z);
        f["rank"] = k;
        flats.push_back(std::move(f));
      }
      out["flats"] = std::move(flats);
      break;
    }
    case RepKind::derived: {
      auto& r = static_cast<const DerivedRep&>(rep);
      const ElementSet set = r.params().set;
      switch (r.op()) {
        case DeriveOp::dual:
          out["op"] = "dual";
          break;
        case DeriveOp::delete_set:
          out["op"] = "delete";
          out["set"] = set_json(set);
          break;
        case DeriveOp::contract_set:
          out["op"] = "contract";
          out["set"] = set_json(set);
          break;
        case DeriveOp::direct_sum:
          out["op"] = "direct_sum";
          out["args"] = {to_json(r.operands()[0]), to_json(r.operands()[1])};
          break;
        case DeriveOp::truncate:
          out["op"] = "truncate";
          out["k"] = r.params().bound;
          break;
        case DeriveOp::principal_extension:
          out["op"] = "principal_extension";
          out["flat"] = set_json(set);
          break;
        case DeriveOp::relaxation:
          out["op"] = "relaxation";
          out["set"] = set_json(set);
          break;
      }
      if (r.op() != DeriveOp::direct_sum) out["of"] = to_json(r.operands()[0]);
      break;
    }
  }
  if (!default_labels(m)) out["labels"] = m.labels();
  return out;
}

}  // namespace

Matroid parse_matroid(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("at byte " + std::to_string(e.byte) +
                     ": malformed JSON");
  }
  return parse_node(doc, "");
}

std::string serialize_matroid(const Matroid& m, int indent) {
  return to_json(m).dump(indent);
}

ElementSet parse_csv_set(std::string_view text) {
  ElementSet s;
  size_t pos = 0;
  auto blank = [](char c) { return c == ' ' || c == '\t'; };
  bool any = false;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && blank(item.front())) item.remove_prefix(1);
    while (!item.empty() && blank(item.back())) item.remove_suffix(1);
    if (item.empty()) {
      if (comma != text.size() || any) {
        throw InputError("empty item in element list \"" + std::string(text) +
                         "\"");
      }
    } else {
      int e = -1;
      auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), e);
      if (ec != std::errc() || end != item.data() + item.size() || e < 0 ||
          e >= kMaxElements) {
        throw InputError("bad element \"" + std::string(item) + "\"");
      }
      if (s.contains(e)) {
        throw InputError("repeated element " + std::to_string(e));
      }
      s = s.with(e);
      any = true;
    }
    pos = comma + 1;
  }
  return s;
}

std::pair<ElementSet, ElementSet> parse_csv_pair(std::string_view text) {
  size_t semi = text.find(';');
  if (semi == std::string_view::npos ||
      text.find(';', semi + 1) != std::string_view::npos) {
    throw InputError("expected a pair \"A;B\", got \"" + std::string(text) +
                     "\"");
  }
  return {parse_csv_set(text.substr(0, semi)),
          parse_csv_set(text.substr(semi + 1))};
}

}  // namespace sbrokit

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "sbrokit/applications.hpp"
#include "sbrokit/catalog.hpp"
#include "sbrokit/circuit_cover.hpp"
#include "sbrokit/covering.hpp"
#include "sbrokit/derive.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/io.hpp"
#include "sbrokit/minors.hpp"
#include "sbrokit/orderability.hpp"
#include "sbrokit/representations.hpp"

namespace py = pybind11;
using namespace sbrokit;

// Element sets cross the boundary as sorted lists of ints; any iterable of
// ints is accepted on the way in.
namespace pybind11::detail {
template <>
struct type_caster<ElementSet> {
  PYBIND11_TYPE_CASTER(ElementSet, const_name("list[int]"));

  bool load(handle src, bool) {
    if (!src || PyUnicode_Check(src.ptr()) || !py::isinstance<py::iterable>(src)) {
      return false;
    }
    ElementSet s;
    for (handle item : py::reinterpret_borrow<py::iterable>(src)) {
      if (!PyLong_Check(item.ptr())) return false;
      long e = item.cast<long>();
      if (e < 0 || e >= kMaxElements) {
        throw py::value_error("element out of range: " + std::to_string(e));
      }
      s = s.with(static_cast<int>(e));
    }
    value = s;
    return true;
  }

  static handle cast(ElementSet s, return_value_policy, handle) {
    py::list out;
    for (int e : s) out.append(e);
    return out.release();
  }
};
}  // namespace pybind11::detail

namespace {

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["oracle_queries"] = s.oracle_queries;
  d["nodes"] = s.nodes;
  return d;
}

py::dict graph_dict(const CoverGraph& g) {
  py::dict d;
  d["shape"] = std::string(to_string(g.shape));
  d["vertices"] = g.vertices;
  d["edges"] = g.edges;
  d["doubled"] = g.doubled;
  return d;
}

CoverGraph graph_from(ElementSet vertices,
                      const std::vector<std::pair<int, int>>& edges,
                      const std::vector<std::pair<int, int>>& doubled,
                      const std::string& shape) {
  CoverGraph g;
  g.vertices = vertices;
  g.edges = edges;
  g.doubled = doubled;
  g.shape = shape.empty() ? CoverShape::free
                          : shape_of(parse_cover_property(shape));
  return g;
}

py::dict exchange_dict(const ExchangeWitness& w) {
  py::dict d;
  d["a_prime"] = w.a_prime;
  d["b_prime"] = w.b_prime;
  d["bijection"] = w.bijection;
  d["exchange_bound"] = w.exchange_bound;
  return d;
}

ExchangeWitness exchange_from(const py::dict& d) {
  ExchangeWitness w;
  w.a_prime = d["a_prime"].cast<ElementSet>();
  w.b_prime = d["b_prime"].cast<ElementSet>();
  w.bijection = d["bijection"].cast<std::vector<std::pair<int, int>>>();
  if (d.contains("exchange_bound") && !d["exchange_bound"].is_none()) {
    w.exchange_bound = d["exchange_bound"].cast<int>();
  }
  return w;
}

py::dict class_dict(const ClassCheck& c) {
  py::dict d;
  d["verdict"] = std::string(to_string(c.verdict));
  d["bases"] = c.bases;
  d["pairs_total"] = c.pairs_total;
  d["pairs_checked"] = c.pairs_checked;
  d["counterexample"] = c.counterexample;
  d["unresolved_pair"] = c.unresolved_pair;
  d["stats"] = stats_dict(c.stats);
  return d;
}

std::vector<std::vector<int>> parts_of(const Partition& p) {
  std::vector<std::vector<int>> out;
  for (ElementSet s : p.parts) out.push_back(s.to_vector());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matroid covering numbers, exchange properties and circuit covers";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError",
                                            PyExc_RuntimeError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation",
                                           PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);

  py::class_<Matroid>(m, "Matroid")
      .def_static("from_json", &parse_matroid, py::arg("text"))
      .def("to_json", &serialize_matroid, py::arg("indent") = -1)
      .def_property_readonly("size", &Matroid::size)
      .def_property_readonly("labels", &Matroid::labels)
      .def_property_readonly("kind",
                             [](const Matroid& x) {
                               return std::string(to_string(x.kind()));
                             })
      .def("rank",
           [](const Matroid& x, std::optional<ElementSet> s) {
             return s ? x.rank(*s) : x.rank();
           },
           py::arg("elements") = py::none())
      .def("is_independent", &Matroid::is_independent)
      .def("is_basis", &Matroid::is_basis)
      .def("closure", [](const Matroid& x, ElementSet s) {
        x.check_subset(s);
        return closure(x, s);
      })
      .def("bases", &enumerate_bases)
      .def("circuits",
           [](const Matroid& x, std::optional<ElementSet> s) {
             return circuits_within(x, s ? *s : x.ground_set());
           },
           py::arg("within") = py::none())
      .def("with_labels", &Matroid::with_labels)
      .def("__len__", &Matroid::size)
      .def("__repr__", [](const Matroid& x) {
        return "<Matroid " + std::string(to_string(x.kind())) + " n=" +
               std::to_string(x.size()) + " r=" + std::to_string(x.rank()) +
               ">";
      });

  m.def("uniform", &make_uniform, py::arg("r"), py::arg("n"));
  m.def("linear", &make_linear, py::arg("p"), py::arg("rows"));
  m.def("graphic", &make_graphic, py::arg("vertices"), py::arg("edges"));
  m.def("partition", &make_partition, py::arg("classes"));
  m.def("paving", &make_paving, py::arg("r"), py::arg("n"),
        py::arg("hyperplanes"));
  m.def("spike", &make_spike, py::arg("r"),
        py::arg("transversals") = std::vector<ElementSet>{});
  m.def("catalog", &catalog_get, py::arg("name"));
  m.def("catalog_names", &catalog_names);

  m.def("dual", &dual);
  m.def("delete", &delete_elements);
  m.def("contract", &contract_elements);
  m.def("direct_sum", &direct_sum);
  m.def("truncate", [](const Matroid& x, int k) { return sbrokit::truncate(x, k); });
  m.def("principal_extension", &principal_extension);

  m.def("covering_number", &covering_number);
  m.def(
      "covering_number_intersection",
      [](const Matroid& a, const Matroid& b, uint64_t budget, int max_k) {
        IntersectionCover c = covering_number_intersection(a, b, budget, max_k);
        py::dict d;
        d["verdict"] = std::string(to_string(c.verdict));
        d["value"] = c.value;
        d["refuted_below"] = c.refuted_below;
        if (c.partition) d["parts"] = parts_of(*c.partition);
        d["stats"] = stats_dict(c.stats);
        return d;
      },
      py::arg("m1"), py::arg("m2"), py::arg("budget") = kDefaultBudget,
      py::arg("max_k") = 64);

  m.def(
      "find_exchange_witness",
      [](const Matroid& x, ElementSet a, ElementSet b, const std::string& prop,
         uint64_t budget) {
        auto r = find_exchange_witness(x, a, b, ExchangeProperty::parse(prop),
                                       budget);
        py::dict d;
        d["verdict"] = std::string(to_string(r.verdict));
        d["witness"] = r.witness ? py::object(exchange_dict(*r.witness))
                                 : py::object(py::none());
        d["stats"] = stats_dict(r.stats);
        return d;
      },
      py::arg("m"), py::arg("a"), py::arg("b"), py::arg("property"),
      py::arg("budget") = kDefaultBudget);
  m.def("verify_witness",
        [](const Matroid& x, ElementSet a, ElementSet b, const py::dict& w) {
          return verify_witness(x, a, b, exchange_from(w));
        });
  m.def(
      "check_class",
      [](const Matroid& x, const std::string& prop, uint64_t budget) {
        if (prop == "r" || prop == "rplus" || prop == "p" || prop == "pplus") {
          return class_dict(
              check_cover_class(x, parse_cover_property(prop), budget));
        }
        return class_dict(check_class(x, ExchangeProperty::parse(prop), budget,
                                      PairOrder::disjoint_first));
      },
      py::arg("m"), py::arg("property"), py::arg("budget") = kDefaultBudget);

  m.def(
      "find_cover_graph",
      [](const Matroid& x, ElementSet a, ElementSet b, const std::string& prop,
         uint64_t budget) {
        auto r = find_cover_graph(x, a, b, parse_cover_property(prop), budget);
        py::dict d;
        d["verdict"] = std::string(to_string(r.verdict));
        d["witness"] = r.witness ? py::object(graph_dict(*r.witness))
                                 : py::object(py::none());
        d["stats"] = stats_dict(r.stats);
        return d;
      },
      py::arg("m"), py::arg("a"), py::arg("b"), py::arg("property"),
      py::arg("budget") = kDefaultBudget);
  m.def(
      "construct_pp_path",
      [](const Matroid& x, ElementSet a, ElementSet b, const std::string& how) {
        return construct_pp_path(x, a, b, parse_construction(how)).sequence;
      },
      py::arg("m"), py::arg("a"), py::arg("b"), py::arg("how") = "auto");
  m.def(
      "covers_pair",
      [](const Matroid& x, ElementSet a, ElementSet b,
         const std::vector<std::pair<int, int>>& edges,
         const std::vector<std::pair<int, int>>& doubled) {
        return covers_pair(x, a, b, graph_from(a ^ b, edges, doubled, ""));
      },
      py::arg("m"), py::arg("a"), py::arg("b"), py::arg("edges"),
      py::arg("doubled") = std::vector<std::pair<int, int>>{});
  m.def(
      "has_shape",
      [](ElementSet a, ElementSet b, const std::vector<std::pair<int, int>>& edges,
         const std::vector<std::pair<int, int>>& doubled,
         const std::string& prop) {
        return has_shape(graph_from(a ^ b, edges, doubled, prop), a - b, b - a);
      },
      py::arg("a"), py::arg("b"), py::arg("edges"), py::arg("doubled"),
      py::arg("property"));
  m.def("fundamental_cover_2regular", [](const Matroid& x, ElementSet a,
                                         ElementSet b) {
    return graph_dict(fundamental_cover_2regular(x, a, b));
  });
  m.def("fundamental_cover_tree", [](const Matroid& x, ElementSet a,
                                     ElementSet b) {
    return graph_dict(fundamental_cover_tree(x, a, b));
  });

  m.def("decompose_common_sbro", [](const Matroid& a, const Matroid& b) {
    CommonDecomposition c = decompose_common_sbro(a, b);
    py::dict d;
    d["k"] = c.k;
    d["parts"] = parts_of(c.partition);
    d["potentials"] = c.potentials;
    d["rounds"] = c.rounds;
    return d;
  });

  m.def(
      "has_minor",
      [](const Matroid& host, const Matroid& pattern, uint64_t budget) {
        auto r = has_minor(host, pattern, budget);
        py::dict d;
        d["verdict"] = std::string(to_string(r.verdict));
        if (r.witness) {
          d["contract"] = r.witness->contract;
          d["delete"] = r.witness->del;
          d["map"] = r.witness->map;
        }
        return d;
      },
      py::arg("host"), py::arg("pattern"), py::arg("budget") = kDefaultBudget);
  m.def("are_isomorphic", &are_isomorphic);

  m.def("weak_cyclic_ordering", [](const Matroid& x, ElementSet a,
                                   ElementSet b, const std::vector<int>& path) {
    CyclicOrdering o = weak_cyclic_ordering(x, a, b, PathWitness{path});
    CyclicCheck c = check_cyclic_ordering(x, o);
    py::dict d;
    std::vector<std::pair<int, int>> seq;
    for (OrderedCopy e : o.sequence) seq.emplace_back(e.element, e.copy);
    d["sequence"] = seq;
    d["ok"] = c.ok();
    d["b_interval_ranks"] = c.b_interval_ranks;
    return d;
  });

  m.def(
      "color_cover_plus_partition",
      [](const Matroid& m1, const Matroid& m2, int k) {
        CoverGraph w = ground_cover_path(m1).graph(true);
        return parts_of(color_cover_plus_partition(w, m2, k));
      },
      py::arg("m1"), py::arg("m2"), py::arg("k") = 3);
  m.def("greedy_color", [](const Matroid& m1, const Matroid& m2) {
    CoverGraph w = ground_cover_path(m1).graph(true);
    return parts_of(greedy_color(w, m2).partition);
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "combspec/corpus.hpp"
#include "combspec/error.hpp"
#include "combspec/serialize.hpp"
#include "combspec/verify.hpp"

namespace py = pybind11;
using namespace combspec;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_py(x));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default: return py::none();
  }
}

py::int_ big_to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

Limits make_limits(unsigned workers, std::uint64_t max_steps, std::uint64_t max_family, int max_n) {
  Limits l;
  l.workers = workers;
  l.max_steps = max_steps;
  l.max_family = max_family;
  l.max_n = max_n;
  return l;
}

SearchOptions make_options(unsigned workers, bool exhaustive) {
  SearchOptions o;
  o.limits.workers = workers;
  o.exhaustive = exhaustive;
  return o;
}

template <class F>
py::object verdict_call(F&& f) {
  json j;
  {
    py::gil_scoped_release release;
    j = to_json(f());
  }
  return to_py(j);
}

}  // namespace

PYBIND11_MODULE(_combspec, m) {
  m.doc() = "Exact combinatorial spectra of ring-weighted complete graphs";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::module_::import("combspec.errors").attr("CombspecError");
      py::object err = cls(std::string(to_string(e.code())), std::string(e.what()));
      PyErr_SetObject(cls.ptr(), err.ptr());
    }
  });

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             SimpleGraph g(n);
             for (auto [a, b] : edges) g.add_edge(a, b);
             return g;
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("parse", [](std::string_view text) { return parse_graph(text); },
                  "Parse an edge list or a graph6 line")
      .def_property_readonly("n", &SimpleGraph::order)
      .def_property_readonly("m", &SimpleGraph::size)
      .def_property_readonly("edges",
                             [](const SimpleGraph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def_property_readonly("graph6", [](const SimpleGraph& g) { return to_graph6(g); })
      .def("edge_list", [](const SimpleGraph& g) { return to_edge_list(g); })
      .def("is_connected", [](const SimpleGraph& g) { return is_connected(g); })
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
      .def("__repr__", [](const SimpleGraph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ", graph6='" +
               to_graph6(g) + "')";
      });

  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("star_graph", &star_graph, py::arg("n"));
  m.def("connected_graphs", &connected_graphs, py::arg("n"), "All connected graphs of order n up to isomorphism");

  m.def(
      "antimagic",
      [](const SimpleGraph& g, unsigned workers, bool exhaustive) {
        return verdict_call([&] { return antimagic_unweighted(g, make_options(workers, exhaustive)); });
      },
      py::arg("graph"), py::arg("workers") = 0, py::arg("exhaustive") = false);
  m.def(
      "strength_at_most",
      [](const SimpleGraph& g, int k, unsigned workers, bool exhaustive) {
        return verdict_call([&] { return strength_at_most(g, k, make_options(workers, exhaustive)); });
      },
      py::arg("graph"), py::arg("k"), py::arg("workers") = 0, py::arg("exhaustive") = false);
  m.def(
      "one_two_three",
      [](const SimpleGraph& g, unsigned workers, bool exhaustive) {
        return verdict_call([&] { return one_two_three(g, make_options(workers, exhaustive)); });
      },
      py::arg("graph"), py::arg("workers") = 0, py::arg("exhaustive") = false);
  m.def(
      "dominating",
      [](const SimpleGraph& g, int k, unsigned workers, bool exhaustive) {
        return verdict_call([&] { return dominating_k(g, k, make_options(workers, exhaustive)); });
      },
      py::arg("graph"), py::arg("k"), py::arg("workers") = 0, py::arg("exhaustive") = false);
  m.def(
      "edge_roman_at_most",
      [](const SimpleGraph& g, int k, unsigned workers, bool exhaustive) {
        return verdict_call([&] { return edge_roman_at_most(g, k, make_options(workers, exhaustive)); });
      },
      py::arg("graph"), py::arg("k"), py::arg("workers") = 0, py::arg("exhaustive") = false);
  m.def(
      "hamiltonian_number",
      [](const SimpleGraph& g, unsigned workers) {
        BigInt h;
        {
          py::gil_scoped_release release;
          h = hamiltonian_number(g, make_limits(workers, Limits{}.max_steps, Limits{}.max_family, Limits{}.max_n));
        }
        return big_to_py(h);
      },
      py::arg("graph"), py::arg("workers") = 0);
  m.def(
      "hamiltonian_spectrum",
      [](const SimpleGraph& h, const SimpleGraph& g) {
        const Spectrum s = hamiltonian_spectrum(h, g);
        py::list out;
        for (const auto& v : s.values()) out.append(v.is_zero() ? py::int_(0) : big_to_py(v.terms()[0].coef.re()));
        return out;
      },
      py::arg("pattern"), py::arg("graph"));

  m.def(
      "oracle",
      [](const std::string& name, const SimpleGraph& g, std::optional<int> k) {
        json j;
        {
          py::gil_scoped_release release;
          oracle::OracleResult r;
          if (name == "antimagic") r = oracle::antimagic(g);
          else if (name == "strength") r = oracle::strength(g, k.value_or(3));
          else if (name == "chi-sigma") r = oracle::chi_sigma(g, k.value_or(3));
          else if (name == "domination") {
            if (!k) throw Error(ErrorCode::invalid_argument, "domination oracle requires k");
            r = oracle::domination(g, *k);
          } else if (name == "edge-roman") r = oracle::edge_roman(g);
          else if (name == "hamiltonian") r = oracle::hamiltonian(g);
          else throw Error(ErrorCode::invalid_argument, "unknown oracle '" + name + "'");
          j = to_json(r);
        }
        return to_py(j);
      },
      py::arg("name"), py::arg("graph"), py::arg("k") = py::none());

  m.def(
      "family_power_size",
      [](const std::vector<SimpleGraph>& graphs) {
        if (graphs.empty()) throw Error(ErrorCode::invalid_argument, "family_power_size: empty family");
        std::vector<WCG> members;
        for (const auto& g : graphs) members.push_back(indicator(g));
        const auto r = power_infty(GraphFamily(graphs.front().order(), std::move(members)), Limits{});
        return py::make_tuple(r.family.size(), r.exponent);
      },
      py::arg("graphs"), "Size of the closure of {I(G) : G in graphs} under * and the stabilizing exponent");
  m.def(
      "edge_deleted_closure_size",
      [](int n) {
        const auto r = power_infty(edge_deleted_family(n), Limits{});
        return py::make_tuple(r.family.size(), r.exponent);
      },
      py::arg("n"), "Size of the closure of {I(K_n - e)} and the stabilizing exponent");
  m.def(
      "coloring_count",
      [](const SimpleGraph& g, int k) {
        const auto fam = family_product(GraphFamily::singleton(indicator(g)), colorings_family(g.order(), k, Limits{}),
                                        Limits{});
        return fam.size();
      },
      py::arg("graph"), py::arg("k"), "Size of I(G) * C(1..k)_n");

  m.def("theorem_suites", &theorem_suites);
  m.def("identity_suites", &identity_suites);
  m.def(
      "verify",
      [](const std::string& suite, int max_n, int min_n, int k_max, unsigned workers) {
        json j;
        {
          py::gil_scoped_release release;
          VerifyOptions o;
          o.min_n = min_n;
          o.max_n = max_n;
          o.k_max = k_max;
          o.limits.workers = workers;
          o.limits.max_n = std::max(o.limits.max_n, max_n);
          j = verify_theorem(suite, o).to_json();
        }
        return to_py(j);
      },
      py::arg("suite"), py::arg("max_n") = 4, py::arg("min_n") = 1, py::arg("k_max") = 3, py::arg("workers") = 0);
  m.def(
      "verify_identity",
      [](const std::string& id, int n_min, int n_max) { return to_py(verify_identity(id, n_min, n_max).to_json()); },
      py::arg("identity"), py::arg("n_min") = 3, py::arg("n_max") = 6);
}

#include "galgrp/errors.hpp"
#include "galgrp/json_io.hpp"
#include "galgrp/kernel_constructions.hpp"
#include "galgrp/perm_group.hpp"
#include "galgrp/presentation.hpp"
#include "galgrp/surface_calculator.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace galgrp;

namespace {

Int int_from_py(const py::object &obj) { return Int(py::str(obj).cast<std::string>()); }

py::object int_to_py(const Int &value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

py::object json_to_py(const OrderedJson &j) {
  auto json_module = py::module_::import("json");
  return json_module.attr("loads")(j.dump());
}

IntMatrix matrix_from_py(const std::vector<std::vector<py::object>> &rows) {
  std::vector<std::vector<Int>> converted;
  for (const auto &row : rows) {
    std::vector<Int> r;
    for (const auto &e : row) r.push_back(int_from_py(e));
    converted.push_back(std::move(r));
  }
  return IntMatrix::from_rows(converted);
}

py::list matrix_to_py(const IntMatrix &m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(int_to_py(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

FgAbelianGroup abelian_from_py(const std::vector<py::object> &torsion, std::size_t rank) {
  std::vector<Int> t;
  for (const auto &e : torsion) t.push_back(int_from_py(e));
  return FgAbelianGroup::from_factors(std::move(t), rank);
}

SurfaceSpec spec_from_kwargs(const std::string &family, const py::kwargs &kwargs) {
  auto get = [&](const char *name) { return kwargs[name].cast<long long>(); };
  if (family == "p2") return SurfaceSpec::projective_plane(get("k"));
  if (family == "quadric") return SurfaceSpec::quadric(get("a"), get("b"));
  if (family == "hirzebruch") return SurfaceSpec::hirzebruch(get("e"), get("a"), get("b"));
  if (family == "cxp1") return SurfaceSpec::curve_cross_line(get("g"), get("d"), get("k"));
  if (family == "custom") return SurfaceSpec::custom(get("n"), get("div"));
  throw std::invalid_argument("unknown surface family: " + family);
}

} // namespace

PYBIND11_MODULE(_galgrp, m) {
  m.doc() = "product-kernel constructions and fundamental groups of Galois closures";

  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

  py::class_<FgAbelianGroup>(m, "AbelianGroup")
      .def(py::init([](const std::vector<py::object> &torsion, std::size_t rank) {
             return abelian_from_py(torsion, rank);
           }),
           py::arg("torsion") = std::vector<py::object>{}, py::arg("rank") = 0)
      .def_property_readonly("torsion",
                             [](const FgAbelianGroup &a) {
                               py::list out;
                               for (const Int &d : a.torsion()) out.append(int_to_py(d));
                               return out;
                             })
      .def_property_readonly("rank", &FgAbelianGroup::free_rank)
      .def_property_readonly("order",
                             [](const FgAbelianGroup &a) -> py::object {
                               auto o = a.order();
                               return o ? int_to_py(*o) : py::none();
                             })
      .def("__eq__", [](const FgAbelianGroup &a, const FgAbelianGroup &b) { return a == b; })
      .def("__str__", [](const FgAbelianGroup &a) { return format_group(a); })
      .def("__repr__",
           [](const FgAbelianGroup &a) { return "AbelianGroup(" + format_group(a) + ")"; });

  py::class_<Perm>(m, "Perm")
      .def(py::init([](const std::string &cycles) { return Perm::parse(cycles); }))
      .def("__mul__", [](const Perm &a, const Perm &b) { return a * b; })
      .def("inverse", &Perm::inverse)
      .def_property_readonly("degree", &Perm::degree)
      .def("__str__", &Perm::str)
      .def("__repr__", [](const Perm &p) { return "Perm(\"" + p.str() + "\")"; });

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init([](std::size_t degree, const std::vector<std::string> &gens,
                       std::size_t cap) {
             std::vector<Perm> parsed;
             for (const auto &g : gens) parsed.push_back(Perm::parse(g, degree));
             std::size_t max_degree = degree;
             for (const Perm &p : parsed) max_degree = std::max(max_degree, p.degree());
             for (Perm &p : parsed) p = p.extended(max_degree);
             return PermGroup(max_degree, std::move(parsed), cap);
           }),
           py::arg("degree"), py::arg("generators") = std::vector<std::string>{},
           py::arg("cap") = kDefaultElementCap)
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", &PermGroup::order)
      .def("abelianization", [](const PermGroup &g) { return abelianization(g); })
      .def("derived_subgroup", [](const PermGroup &g) { return derived_subgroup(g); })
      .def("nilpotency_class",
           [](const PermGroup &g) -> py::object {
             auto c = nilpotency_class(g);
             return c ? py::cast(*c) : py::none();
           })
      .def("__repr__", [](const PermGroup &g) {
        return "PermGroup(degree=" + std::to_string(g.degree()) +
               ", order=" + std::to_string(g.order()) + ")";
      });

  m.def("cyclic_group", &cyclic_group, py::arg("n"));
  m.def("symmetric_group", &symmetric_group, py::arg("n"));
  m.def("dihedral_group", &dihedral_group, py::arg("n"));
  m.def("klein_four_group", &klein_four_group);
  m.def("quaternion_group", &quaternion_group);

  m.def(
      "snf",
      [](const std::vector<std::vector<py::object>> &rows) {
        SmithDecomposition d = smith_normal_form(matrix_from_py(rows));
        return py::make_tuple(matrix_to_py(d.u), matrix_to_py(d.s), matrix_to_py(d.v));
      },
      py::arg("matrix"), "Smith normal form; returns (u, s, v) with u*m*v = s");

  m.def(
      "cokernel",
      [](const std::vector<std::vector<py::object>> &rows, py::object nrows) {
        if (rows.empty() && !nrows.is_none())
          return cokernel(IntMatrix(nrows.cast<std::size_t>(), 0));
        return cokernel(matrix_from_py(rows));
      },
      py::arg("matrix"), py::arg("nrows") = py::none());

  m.def(
      "hom_kernel",
      [](const FgAbelianGroup &source, const FgAbelianGroup &target,
         const std::vector<std::vector<py::object>> &matrix) {
        return hom_kernel({source, target, matrix_from_py(matrix)});
      },
      py::arg("source"), py::arg("target"), py::arg("matrix"));

  m.def("exterior_square", &exterior_square, py::arg("group"));
  m.def(
      "quotient_by_diagonal",
      [](const FgAbelianGroup &a, std::size_t copies, const py::object &sub_order) {
        return quotient_by_diagonal(a, copies, int_from_py(sub_order));
      },
      py::arg("group"), py::arg("copies"), py::arg("sub_order"));

  m.def(
      "kappa_kernel",
      [](const py::object &d, const py::object &target, std::size_t m_) {
        return kappa_kernel(int_from_py(d), int_from_py(target), m_);
      },
      py::arg("d"), py::arg("target"), py::arg("m"));

  m.def(
      "k_group",
      [](const PermGroup &g, int n) { return k_group_finite(g, n).group; },
      py::arg("group"), py::arg("n"),
      "product kernel K(G, n) realized as a permutation group");
  m.def("k_group_abelian", &k_group_abelian, py::arg("group"), py::arg("n"));
  m.def("recover_quotient", &recover_quotient, py::arg("group"), py::arg("n"));

  m.def(
      "ktilde",
      [](const FgAbelianGroup &a, int n) { return json_to_py(to_json(ktilde_structure(a, n))); },
      py::arg("group"), py::arg("n"));

  m.def(
      "verify_snd",
      [](int n, int d, bool allow_small_n, bool allow_large_n) {
        return json_to_py(to_json(verify_phi_relators(n, d, allow_small_n, allow_large_n)));
      },
      py::arg("n"), py::arg("d"), py::arg("allow_small_n") = false,
      py::arg("allow_large_n") = false);

  m.def(
      "surface_report",
      [](const std::string &family, const py::kwargs &kwargs) {
        return json_to_py(to_json(analyze_surface(spec_from_kwargs(family, kwargs))));
      },
      py::arg("family"));

  m.def(
      "parse_presentation",
      [](const std::string &text) {
        Presentation p = parse_presentation(text);
        py::list relators;
        for (const Word &w : p.relators) relators.append(w.str());
        return py::make_tuple(p.generators, relators);
      },
      py::arg("text"), "returns (generators, reduced relator strings)");

  m.def("format_group", [](const FgAbelianGroup &a) { return format_group(a); });
}

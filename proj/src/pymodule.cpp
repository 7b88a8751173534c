#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "signedperm/bijections.hpp"
#include "signedperm/genfun.hpp"
#include "signedperm/recurrences.hpp"

namespace py = pybind11;

namespace sp = signedperm;

namespace {

sp::Axis parse_axis(const std::string& axis) {
  if (axis == "h") return sp::Axis::Horizontal;
  if (axis == "v") return sp::Axis::Vertical;
  throw std::invalid_argument("axis must be \"h\" or \"v\"");
}

sp::PathCountMethod parse_path_method(const std::string& method) {
  if (method == "formula") return sp::PathCountMethod::Formula;
  if (method == "boundary") return sp::PathCountMethod::Boundary;
  throw std::invalid_argument("method must be \"formula\" or \"boundary\"");
}

sp::CountMethod parse_count_method(const std::string& method) {
  if (method == "closed") return sp::CountMethod::ClosedForm;
  if (method == "brute") return sp::CountMethod::BruteForce;
  throw std::invalid_argument("method must be \"closed\" or \"brute\"");
}

}  // namespace

PYBIND11_MODULE(_signedperm, m) {
  m.doc() = "Descent statistics of signed permutations (C++ core bindings)";

  py::register_exception<sp::ResourceLimitError>(m, "ResourceLimitError",
                                                 PyExc_RuntimeError);

  py::enum_<sp::Order>(m, "Order")
      .value("Natural", sp::Order::Natural)
      .value("R", sp::Order::R);

  py::enum_<sp::PermClass>(m, "PermClass")
      .value("All", sp::PermClass::All)
      .value("Involution", sp::PermClass::Involution)
      .value("FpfInvolution", sp::PermClass::FpfInvolution);

  py::enum_<sp::BijectionFamily>(m, "BijectionFamily")
      .value("TwoSided", sp::BijectionFamily::TwoSided)
      .value("Involution", sp::BijectionFamily::Involution)
      .value("FpfInvolution", sp::BijectionFamily::FpfInvolution);

  py::class_<sp::SignedPermutation>(m, "SignedPermutation")
      .def(py::init<std::vector<int>>(), py::arg("window"))
      .def_static("identity", &sp::SignedPermutation::identity, py::arg("n"))
      .def_static("parse", &sp::SignedPermutation::parse, py::arg("text"))
      .def_property_readonly("n", &sp::SignedPermutation::size)
      .def("window", &sp::SignedPermutation::window)
      .def("image", &sp::SignedPermutation::image, py::arg("a"))
      .def("inverse", &sp::SignedPermutation::inverse)
      .def("negative_count", &sp::SignedPermutation::negative_count)
      .def("is_involution", &sp::SignedPermutation::is_involution)
      .def("is_fpf_involution", &sp::SignedPermutation::is_fpf_involution)
      .def("__str__", &sp::SignedPermutation::str)
      .def("__repr__",
           [](const sp::SignedPermutation& pi) {
             return "SignedPermutation.parse(\"" + pi.str() + "\")";
           })
      .def("__len__", &sp::SignedPermutation::size)
      .def(py::self == py::self)
      .def("__hash__", [](const sp::SignedPermutation& pi) {
        return py::hash(py::str(pi.str()));
      });

  m.def("classify", &sp::classify, py::arg("pi"));
  m.def("family_size", &sp::family_size, py::arg("n"), py::arg("family"));
  m.def("enumeration_limit", &sp::enumeration_limit);
  m.def(
      "enumerate_family",
      [](int n, sp::PermClass family) {
        return sp::enumerate_family(n, family);
      },
      py::arg("n"), py::arg("family") = sp::PermClass::All);

  m.def("des", &sp::des, py::arg("pi"), py::arg("order") = sp::Order::Natural);
  m.def("ides", &sp::ides, py::arg("pi"),
        py::arg("order") = sp::Order::Natural);
  m.def("descent_set", &sp::descent_set, py::arg("pi"),
        py::arg("order") = sp::Order::Natural);
  m.def(
      "two_sided_triangle",
      [](int n, sp::Order order) {
        return sp::two_sided_triangle(n, order).cell;
      },
      py::arg("n"), py::arg("order") = sp::Order::Natural);
  m.def(
      "eulerian_vector",
      [](int n, sp::Order order) { return sp::eulerian_vector(n, order); },
      py::arg("n"), py::arg("order") = sp::Order::Natural);
  m.def(
      "descent_vector",
      [](int n, sp::PermClass family, sp::Order order) {
        return sp::descent_vector(n, family, order);
      },
      py::arg("n"), py::arg("family"), py::arg("order") = sp::Order::Natural);

  m.def("render_board", &sp::render_board, py::arg("pi"));
  m.def("insert_square", &sp::insert_square, py::arg("pi"), py::arg("row"),
        py::arg("col"), py::arg("sign"));
  m.def("delete_square", &sp::delete_square, py::arg("sigma"), py::arg("row"),
        py::arg("col"));

  m.def(
      "insertion_type",
      [](const sp::SignedPermutation& pi, int row, int col, int sign,
         sp::Order order) {
        const sp::InsertionType t = sp::insertion_type(pi, row, col, sign,
                                                       order);
        return std::make_pair(t.des_shift, t.ides_shift);
      },
      py::arg("pi"), py::arg("row"), py::arg("col"), py::arg("sign"),
      py::arg("order") = sp::Order::Natural);
  m.def(
      "count_insertion_types",
      [](const sp::SignedPermutation& pi, int sign, sp::Order order,
         const std::string& method) {
        const sp::TypeCounts t =
            sp::count_insertion_types(pi, sign, order,
                                      parse_count_method(method));
        return std::vector<std::vector<long long>>{
            {t.at(0, 0), t.at(0, 1)}, {t.at(1, 0), t.at(1, 1)}};
      },
      py::arg("pi"), py::arg("sign"), py::arg("order") = sp::Order::Natural,
      py::arg("method") = "closed");
  m.def(
      "count_paths",
      [](const sp::SignedPermutation& pi, sp::Order order,
         const std::string& axis, int value, int sign,
         const std::string& method) {
        return sp::count_paths(pi, order,
                               sp::PathFamily{parse_axis(axis), value, sign},
                               parse_path_method(method));
      },
      py::arg("pi"), py::arg("order") = sp::Order::Natural,
      py::arg("axis") = "h", py::arg("value") = 0, py::arg("sign") = 1,
      py::arg("method") = "formula");
  m.def(
      "trace_path",
      [](const sp::SignedPermutation& pi, sp::Order order,
         const std::string& axis, int value, int sign, int start) {
        std::vector<std::pair<int, int>> points;
        for (const sp::GridPoint& p : sp::trace_path(
                 pi, order, sp::PathFamily{parse_axis(axis), value, sign},
                 start)) {
          points.emplace_back(p.row, p.col);
        }
        return points;
      },
      py::arg("pi"), py::arg("order"), py::arg("axis"), py::arg("value"),
      py::arg("sign"), py::arg("start"));

  m.def("two_sided_by_recurrence", &sp::two_sided_by_recurrence, py::arg("n"));
  m.def("involution_by_recurrence", &sp::involution_by_recurrence,
        py::arg("n"));
  m.def("fpf_by_recurrence", &sp::fpf_by_recurrence, py::arg("size"),
        py::arg("order"));

  py::class_<sp::BijectionReport>(m, "BijectionReport")
      .def_readonly("family", &sp::BijectionReport::family)
      .def_readonly("order", &sp::BijectionReport::order)
      .def_readonly("n", &sp::BijectionReport::n)
      .def_readonly("ok", &sp::BijectionReport::ok)
      .def_readonly("sources", &sp::BijectionReport::sources)
      .def_readonly("targets", &sp::BijectionReport::targets)
      .def_readonly("class_counts", &sp::BijectionReport::class_counts)
      .def_readonly("witness", &sp::BijectionReport::witness);
  m.def(
      "verify_bijection",
      [](sp::BijectionFamily family, sp::Order order, int n, int jobs) {
        return sp::verify_bijection(family, order, n,
                                    sp::enumeration_limit(), jobs);
      },
      py::arg("family"), py::arg("order"), py::arg("n"), py::arg("jobs") = 1);

  m.def(
      "series_identity_holds",
      [](const std::string& family, int max_x, int max_t) {
        const sp::SeriesIdentity id = family == "jub"
                                          ? sp::SeriesIdentity::FpfInvolution
                                          : sp::SeriesIdentity::Involution;
        return !sp::compare_series(sp::lhs_series(id, max_x, max_t),
                                   sp::rhs_series(id, max_x, max_t))
                    .has_value();
      },
      py::arg("family"), py::arg("max_x") = 6, py::arg("max_t") = 6);
}

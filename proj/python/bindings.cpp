#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "roothk/report.hpp"

namespace py = pybind11;
using namespace roothk;

namespace {

RootSystemSpec spec_of(const std::string& family, int rank) {
  RootSystemSpec s{parse_family(family), rank};
  s.validate();
  return s;
}

GroupCap cap_of(std::optional<std::uint64_t> cap) {
  if (cap) {
    if (*cap == 0) throw InvalidSpec("group cap must be positive");
    return {*cap};
  }
  return GroupCap::from_env();
}

py::int_ to_py(const Integer& z) {
  return py::int_(py::module_::import("builtins").attr("int")(z.get_str()));
}

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.append(to_py(m(i, j)));
    rows.append(r);
  }
  return rows;
}

IntMatrix from_py(const std::vector<std::vector<py::int_>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Integer(py::str(py::handle(rows[i][j])).cast<std::string>());
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact root-lattice checks for holomorphic-symplectic quotients";
  m.attr("__version__") = kToolVersion;

  // translators run newest first, so the subclass goes last
  py::register_exception<Error>(m, "RoothkError", PyExc_RuntimeError);
  py::register_exception<InvalidSpec>(m, "InvalidSpec", PyExc_ValueError);

  m.def("cartan_matrix", [](const std::string& f, int n) { return to_py(cartan_matrix(spec_of(f, n))); },
        py::arg("family"), py::arg("rank"));
  m.def("gram_matrix",
        [](const std::string& f, int n) { return to_py(build_root_datum(spec_of(f, n)).gram); },
        py::arg("family"), py::arg("rank"));
  m.def("group_order", [](const std::string& f, int n) { return to_py(group_order_formula(spec_of(f, n))); },
        py::arg("family"), py::arg("rank"));
  m.def("enumerate_group_size",
        [](const std::string& f, int n, std::optional<std::uint64_t> cap) {
          const WeylGroup g = generate_group(build_root_datum(spec_of(f, n)), cap_of(cap));
          return g.size();
        },
        py::arg("family"), py::arg("rank"), py::arg("group_cap") = py::none());
  m.def("invariant_dims",
        [](const std::string& f, int n) {
          const InvariantReport r = lemma_report(spec_of(f, n));
          py::dict d;
          d["sym2"] = r.dim_sym2_inv;
          d["wedge2"] = r.dim_wedge2_inv;
          d["wedge2_doubled"] = r.dim_wedge2_doubled_inv;
          d["irreducible"] = r.irreducible;
          return d;
        },
        py::arg("family"), py::arg("rank"));
  m.def("smith_normal_form",
        [](const std::vector<std::vector<py::int_>>& rows) {
          py::list out;
          for (const auto& d : smith_normal_form(from_py(rows)).diag) out.append(to_py(d));
          return out;
        },
        py::arg("matrix"));

  m.def("analyze_json",
        [](const std::string& f, int n, const std::string& lattice,
           std::optional<std::uint64_t> cap) {
          return render_json(cmd_analyze(spec_of(f, n), LatticeSelector::parse(lattice), cap_of(cap)));
        },
        py::arg("family"), py::arg("rank"), py::arg("lattice") = "root",
        py::arg("group_cap") = py::none());
  m.def("lemma_check_json", [](int max_rank) { return render_json(cmd_lemma_check(max_rank)); },
        py::arg("max_rank") = 8);
  m.def("sublattices_json",
        [](const std::string& f, int n) { return render_json(cmd_sublattices(spec_of(f, n))); },
        py::arg("family"), py::arg("rank"));
  m.def("report_json",
        [](const std::string& suite, std::optional<std::uint64_t> cap) {
          py::gil_scoped_release release;
          return render_json(cmd_report(suite, cap_of(cap)));
        },
        py::arg("suite") = "default", py::arg("group_cap") = py::none());
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latdist/bounds.hpp"
#include "latdist/configuration.hpp"
#include "latdist/distance.hpp"
#include "latdist/number_theory.hpp"
#include "latdist/report.hpp"
#include "latdist/search.hpp"

namespace py = pybind11;
using namespace latdist;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact distinct-distance counting on planar lattices";

  py::enum_<Lattice>(m, "Lattice")
      .value("TRIANGULAR", Lattice::Triangular)
      .value("SQUARE", Lattice::Square);

  py::class_<Point>(m, "Point")
      .def(py::init<Coord, Coord>(), py::arg("a"), py::arg("b"))
      .def_readwrite("a", &Point::a)
      .def_readwrite("b", &Point::b)
      .def("__repr__", [](const Point& p) {
        return "Point(" + std::to_string(p.a) + ", " + std::to_string(p.b) + ")";
      });

  py::class_<Configuration>(m, "Configuration")
      .def_readonly("lattice", &Configuration::lattice)
      .def_readonly("points", &Configuration::points)
      .def_readonly("label", &Configuration::label)
      .def("__len__", &Configuration::size)
      .def("to_text", [](const Configuration& c) {
        std::ostringstream os;
        write_configuration(os, c);
        return os.str();
      });

  m.def("tri_norm", &tri_norm, py::arg("a"), py::arg("b"));
  m.def("sq_norm", &sq_norm, py::arg("a"), py::arg("b"));
  m.def("hex_array", &hex_array, py::arg("s"));
  m.def("square_array", &square_array, py::arg("s"));
  m.def("tri_disk", &tri_disk, py::arg("max_sq_radius"));
  m.def("sq_disk", &sq_disk, py::arg("max_sq_radius"));
  m.def("disk_point_count", &disk_point_count, py::arg("lattice"),
        py::arg("max_sq_radius"));
  m.def("disk_sq_radius_for_points", &disk_sq_radius_for_points,
        py::arg("lattice"), py::arg("n"));
  m.def("parse_configuration", [](const std::string& text) {
    std::istringstream is(text);
    return read_configuration(is);
  });

  m.def(
      "distinct_distances",
      [](const Configuration& c, bool allow_large) {
        return distinct_distances_exact(c, allow_large).values;
      },
      py::arg("configuration"), py::arg("allow_large") = false,
      "Sorted positive squared distances of the configuration");
  m.def("distinct_distances_hex", &distinct_distances_hex, py::arg("s"));
  m.def("distinct_distances_square", &distinct_distances_square, py::arg("s"));
  m.def("disk_distance_overestimate", &disk_distance_overestimate,
        py::arg("lattice"), py::arg("max_sq_radius"));

  m.def(
      "count_representable",
      [](Lattice lattice, std::int64_t upper) {
        RepresentabilitySieve sieve(form_of(lattice), upper);
        return sieve.count_up_to(upper);
      },
      py::arg("lattice"), py::arg("upper"),
      "Number of n in [1, upper] representable by the lattice form");

  m.def("landau_ramanujan",
        [](std::int64_t b) { return landau_ramanujan(b).value; },
        py::arg("prime_bound") = 1000000);
  m.def("loeschian_constant",
        [](std::int64_t b) { return loeschian_constant(b).value; },
        py::arg("prime_bound") = 1000000);
  m.def("heuristic_ratio",
        [](std::int64_t b) { return heuristic_ratio(b).value; },
        py::arg("prime_bound") = 1000000);
  m.def("conjecture_constant",
        [](std::int64_t b) { return conjecture_constant(b).value; },
        py::arg("prime_bound") = 1000000);

  m.def("central_hex_number", &central_hex_number, py::arg("s"));
  m.def("lower_bound_g", &lower_bound_g, py::arg("k"));
  m.def(
      "theorem_gaps",
      [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
        std::vector<WitnessPair> ws;
        for (const auto& [k, n] : pairs) ws.push_back({k, n, ""});
        return theorem_coverage(ws).gaps;
      },
      py::arg("witness_pairs"),
      "Uncovered k in [7, 62] given (k, n) witness pairs");
  m.def("known_witness_pairs", [] {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const WitnessPair& w : known_witness_pairs()) out.emplace_back(w.k, w.n);
    return out;
  });

  m.def(
      "table1_csv",
      [](int hex_max, int sq_max) {
        return emit(table1(hex_max, sq_max), TableFormat::Csv);
      },
      py::arg("hex_max") = kTable1HexMaxDefault,
      py::arg("sq_max") = kTable1SquareMaxDefault);
  m.def(
      "table2_csv",
      [](int rows, bool exact_disks, int threads) {
        return emit(table2(rows, exact_disks, threads), TableFormat::Csv);
      },
      py::arg("rows") = kTable2RowsDefault, py::arg("exact_disks") = false,
      py::arg("threads") = 0);

  m.def(
      "find_witness",
      [](std::int64_t k, std::int64_t n_min, std::int64_t budget_seconds) {
        SearchBudget budget;
        budget.max_seconds = budget_seconds;
        const SearchResult res = find_witness(k, n_min, budget);
        return py::make_tuple(res.target_met, res.k_achieved, res.n_achieved,
                              res.best);
      },
      py::arg("k"), py::arg("n_min"), py::arg("budget_seconds") = 60);
}

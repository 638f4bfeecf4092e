#include "polyvor/commands.hpp"
#include "polyvor/oracle.hpp"
#include "polyvor/polytope.hpp"
#include "polyvor/variety.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace polyvor;

namespace {

py::tuple run(const std::string& command, const std::string& problem, std::optional<std::uint64_t> seed,
              const std::vector<std::string>& points, bool svg) {
    CommandResult r;
    {
        py::gil_scoped_release release;
        const Problem p = parse_problem_text(problem);
        CommandOptions o;
        o.seed = seed;
        o.want_svg = svg;
        for (const auto& s : points) {
            o.points.push_back(parse_point(s));
        }
        r = run_command(command, p, o);
    }
    return py::make_tuple(r.json.dump(), r.svg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Polyhedral-norm Voronoi geometry of hypersurfaces";

    py::register_exception<ProblemError>(m, "ProblemError", PyExc_ValueError);
    py::register_exception<BallError>(m, "BallError", PyExc_ValueError);
    py::register_exception<OffVarietyError>(m, "OffVarietyError", PyExc_ValueError);
    py::register_exception<SingularPointError>(m, "SingularPointError", PyExc_ValueError);
    py::register_exception<OracleFailure>(m, "OracleFailure", PyExc_RuntimeError);
    py::register_exception<NoVarietyPointsError>(m, "NoVarietyPointsError", PyExc_RuntimeError);

    m.def("run", &run, py::arg("command"), py::arg("problem"), py::arg("seed") = py::none(),
          py::arg("points") = std::vector<std::string>{}, py::arg("svg") = false,
          "Runs a command on a problem given as JSON text; returns (json text, svg text).");
}

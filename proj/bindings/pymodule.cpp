/*
 * pymodule.cpp
 * ------------
 * Python extension module `izeta._izeta`.
 *
 * The heavy lifting goes through run(), which accepts the same job
 * description as the command-line tool (as a dict) and returns the
 * report; the Python package wraps it with typed conveniences.  The
 * arc-counting oracle is additionally exposed directly, since its
 * results are plain integers.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "izeta/arc_oracle.hpp"
#include "izeta/cli.hpp"
#include "izeta/errors.hpp"
#include "izeta/qpoly.hpp"
#include "izeta/strata.hpp"

namespace py = pybind11;
using namespace izeta;

namespace {

// Exact integers cross the boundary as decimal strings -> Python ints.
py::int_ to_py(const BigInt& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

JobSpec job_from_dict(const py::dict& d) {
    JobSpec job;
    for (const auto& item : d) {
        const std::string key = py::cast<std::string>(item.first);
        const py::handle value = item.second;
        if (key == "poly")
            job.poly = py::cast<std::string>(value);
        else if (key == "resolution")
            job.resolution_file = py::cast<std::string>(value);
        else if (key == "region")
            job.region = RegionSpec::parse(py::cast<std::string>(value));
        else if (key == "characters")
            for (const py::handle c : py::cast<py::sequence>(value))
                job.characters.push_back(Character::parse(py::cast<std::string>(c)));
        else if (key == "motivic")
            job.motivic = py::cast<bool>(value);
        else if (key == "topological")
            job.topological = py::cast<bool>(value);
        else if (key == "padic")
            job.padic_q = py::cast<long>(value);
        else if (key == "spectrum")
            job.spectrum = py::cast<bool>(value);
        else if (key == "functional_equation")
            job.functional_equation_r = py::cast<long>(value);
        else if (key == "oracle")
            job.oracle_poly = py::cast<std::string>(value);
        else if (key == "q")
            job.oracle_q = py::cast<long>(value);
        else if (key == "d")
            job.oracle_d = py::cast<long>(value);
        else if (key == "depth")
            job.oracle_depth = py::cast<long>(value);
        else if (key == "format")
            job.format = py::cast<std::string>(value) == "json"
                             ? JobSpec::Format::Json
                             : JobSpec::Format::Text;
        else if (key == "jet_budget")
            job.jet_budget = py::cast<long long>(value);
        else if (key == "blowup_budget")
            job.blowup_budget = py::cast<long>(value);
        else
            throw InputError("job: unknown field \"" + key + "\"");
    }
    return job;
}

py::dict report_to_dict(const ArcCountReport& r) {
    py::dict out;
    out["q"] = r.q;
    out["d"] = r.d;
    out["n"] = r.n;
    out["region"] = r.region.to_string();
    out["generator"] = r.generator;
    out["count"] = to_py(r.count);
    py::list tallies;
    for (const BigInt& t : r.tallies) tallies.append(to_py(t));
    out["tallies"] = tallies;
    return out;
}

}  // namespace

PYBIND11_MODULE(_izeta, m) {
    m.doc() = "exact zeta functions from embedded-resolution data";
    m.attr("__version__") = "0.1.0";

    // Most-derived translators must be registered last (they are
    // consulted in reverse order of registration).
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<BudgetError>(m, "BudgetError",
                                        PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def(
        "run",
        [](const py::dict& d) {
            JobSpec job = job_from_dict(d);
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_job(job, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("job"),
        "Run one batch job described by a dict (same fields as the "
        "command-line flags); returns (exit_code, report, diagnostics).");

    m.def(
        "count_jets",
        [](const std::string& poly, long m_, long q, long n,
           const std::string& region, long long budget) {
            const QPoly f = QPoly::parse(poly);
            const RegionSpec reg = RegionSpec::parse(region);
            ArcCountReport r;
            {
                py::gil_scoped_release release;
                r = count_jets(f, m_, q, n, reg, budget);
            }
            return to_py(r.count);
        },
        py::arg("poly"), py::arg("m"), py::arg("q"), py::arg("n"),
        py::arg("region") = "whole-space",
        py::arg("budget") = kDefaultJetBudget,
        "Number of m-variable jets over F_q, truncated mod t^{n+1} with "
        "constant term in the region, on which the polynomial has order "
        "exactly n.");

    m.def(
        "twisted_tally",
        [](const std::string& poly, long m_, long q, long d, long n,
           const std::string& region, long long budget, long generator) {
            const QPoly f = QPoly::parse(poly);
            const RegionSpec reg = RegionSpec::parse(region);
            ArcCountReport r;
            {
                py::gil_scoped_release release;
                r = twisted_tally(f, m_, q, d, n, reg, budget, generator);
            }
            return report_to_dict(r);
        },
        py::arg("poly"), py::arg("m"), py::arg("q"), py::arg("d"),
        py::arg("n"), py::arg("region") = "whole-space",
        py::arg("budget") = kDefaultJetBudget, py::arg("generator") = 0,
        "As count_jets, additionally tallied by the discrete logarithm "
        "(mod d) of the leading coefficient; returns a dict with count, "
        "tallies and the reference generator.");

    m.def("gf_generators", &gf_generators, py::arg("q"),
          "All generators of the multiplicative group of F_q.");
}

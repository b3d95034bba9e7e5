#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permutent/cli.hpp"
#include "permutent/serialize.hpp"

namespace py = pybind11;
using namespace permutent;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list entries(const Spectrum& s) {
    py::list out;
    for (const auto& e : s.entries) {
        py::tuple k(e.composition.size());
        for (std::size_t i = 0; i < e.composition.size(); ++i) k[i] = e.composition[i];
        out.append(py::make_tuple(k, static_cast<double>(e.weight.value())));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entanglement spectra and entropies of permutation-invariant spin states.";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<SectorConfig>(m, "Sector")
        .def_static("finite", &SectorConfig::finite, py::arg("occupations"))
        .def_static("infinite", &SectorConfig::infinite, py::arg("densities"))
        .def_property_readonly("is_finite", &SectorConfig::is_finite)
        .def_property_readonly("d", &SectorConfig::dim)
        .def_property_readonly("sigma", &SectorConfig::sigma)
        .def_property_readonly("L", [](const SectorConfig& c) -> py::object {
            if (c.is_finite()) return py::int_(c.size());
            return py::float_(INFINITY);
        })
        .def_property_readonly("densities", &SectorConfig::densities)
        .def("to_dict", [](const SectorConfig& c) { return to_python(sector_to_json(c)); })
        .def("__repr__", [](const SectorConfig& c) { return "Sector(" + sector_to_json(c).dump() + ")"; });

    m.def("exact_spectrum", [](const SectorConfig& c, int n) { return entries(exact_spectrum(c, n)); },
          py::arg("sector"), py::arg("n"), "List of (composition, weight) pairs for a finite sector.");
    m.def("thermo_spectrum",
          [](const std::vector<double>& p, int n, double cutoff) { return entries(thermo_spectrum(p, n, cutoff)); },
          py::arg("densities"), py::arg("n"), py::arg("cutoff") = 0.0);
    m.def("uniform_mixed_spectrum", [](int n, int d) { return entries(uniform_mixed_spectrum(n, d)); }, py::arg("n"),
          py::arg("d"));
    m.def("spectrum_json",
          [](const SectorConfig& c, int n, bool exact) {
              const auto s = c.is_finite() ? exact_spectrum(c, n, exact ? ExactWeights::On : ExactWeights::Off)
                                           : thermo_spectrum(c.densities(), n);
              return to_python(spectrum_to_json(s));
          },
          py::arg("sector"), py::arg("n"), py::arg("exact") = false);
    m.def("dimension_symmetric_subspace", [](int n, int d) {
        return py::int_(py::reinterpret_steal<py::object>(
            PyLong_FromString(dimension_symmetric_subspace(n, d).get_str().c_str(), nullptr, 10)));
    });

    m.def("block_entropy", &block_entropy, py::arg("sector"), py::arg("n"));
    m.def("asymptotic_entropy", &asymptotic_entropy, py::arg("sector"), py::arg("n"));
    m.def("max_entropy_bound", &max_entropy_bound, py::arg("n"), py::arg("d"));
    m.def("entropy_report", [](const SectorConfig& c, int n) { return to_python(report_to_json(entropy_report(c, n))); },
          py::arg("sector"), py::arg("n"));
    m.def("finite_size_corrections",
          [](const SectorConfig& c, int n, double cc) { return to_python(report_to_json(finite_size_corrections(c, n, cc))); },
          py::arg("sector"), py::arg("n"), py::arg("central_charge") = kDefaultCentralCharge);
    m.def("effective_spin",
          [](const std::vector<double>& p, double tol) {
              const auto e = effective_spin(p, tol);
              return py::dict(py::arg("sigma_eff") = e.sigma_eff(), py::arg("vanished_levels") = e.vanished_levels,
                              py::arg("reduced_densities") = e.reduced_densities);
          },
          py::arg("densities"), py::arg("zero_tol") = kDefaultZeroTolerance);
    m.def("fit_prefactor", [](const std::vector<std::pair<int, double>>& pts) { return fit_prefactor(pts); },
          py::arg("points"));

    m.def("gaussian_model",
          [](const std::vector<double>& p, int n, int eliminated) {
              const auto g = build_gaussian(p, n, eliminated);
              auto j = model_to_json(g);
              j["entropy_bits"] = gaussian_entropy(g);
              return to_python(j);
          },
          py::arg("densities"), py::arg("n"), py::arg("eliminated") = 0);

    m.def("verify_theorem",
          [](const SectorConfig& c, int n, double tol) { return to_python(report_to_json(oracle::verify_theorem(c, n, tol))); },
          py::arg("sector"), py::arg("n"), py::arg("tol") = oracle::kDefaultMatchTolerance);
    m.def("verify_uniform_mixture",
          [](int L, int d, int n, double tol) { return to_python(report_to_json(oracle::verify_uniform_mixture(L, d, n, tol))); },
          py::arg("L"), py::arg("d"), py::arg("n"), py::arg("tol") = oracle::kDefaultMatchTolerance);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int code = 0;
              {
                  py::gil_scoped_release release;
                  code = cli::run(args, out, err);
              }
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Runs the command-line front end in-process; returns (exit_code, stdout, stderr).");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coulho/frobenius.hpp"
#include "coulho/models.hpp"
#include "coulho/report.hpp"
#include "coulho/sweep.hpp"
#include "coulho/variational.hpp"

namespace py = pybind11;
using namespace coulho;

namespace {

py::dict json_to_dict(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump()).cast<py::dict>();
}

}  // namespace

PYBIND11_MODULE(_coulho, m) {
  m.doc() = "Radial Coulomb-plus-oscillator problem: truncated series, variational spectra, sweeps.";

  py::register_exception<BasisShortfall>(m, "BasisShortfall", PyExc_RuntimeError);

  py::class_<TruncationSolution>(m, "TruncationSolution")
      .def_readonly("n", &TruncationSolution::n)
      .def_readonly("gamma", &TruncationSolution::gamma)
      .def_readonly("W", &TruncationSolution::W)
      .def_property_readonly("roots", [](const TruncationSolution& s) { return s.roots.roots; })
      .def_property_readonly("multiplicities", [](const TruncationSolution& s) { return s.roots.multiplicities; })
      .def_property_readonly("exact", &TruncationSolution::exact)
      .def_property_readonly("poly_coefficients", &TruncationSolution::poly_coefficients)
      .def_readonly("termination_residual", &TruncationSolution::termination_residual)
      .def("to_dict", [](const TruncationSolution& s) { return json_to_dict(to_json(s)); })
      .def("to_csv", [](const TruncationSolution& s) { return to_csv(s); });

  m.def("truncation_spectrum", &truncation_spectrum, py::arg("n"), py::arg("gamma") = 0.0,
        py::arg("tol") = kDefaultRootTolerance, "Energy 2n+2|gamma|+2 and the sorted real roots a of c_{n+1}(a).");
  m.def("termination_ratio", &termination_ratio, py::arg("n"), py::arg("gamma"), py::arg("a"), py::arg("extra") = 10);

  py::class_<SpectrumResult>(m, "SpectrumResult")
      .def_property_readonly("gamma", [](const SpectrumResult& r) { return r.spec.gamma; })
      .def_property_readonly("a", [](const SpectrumResult& r) { return r.spec.a; })
      .def_property_readonly("requested_N", [](const SpectrumResult& r) { return r.basis.size; })
      .def_readonly("usable_N", &SpectrumResult::usable_N)
      .def_readonly("shrunk", &SpectrumResult::shrunk)
      .def_readonly("eigenvalues", &SpectrumResult::eigenvalues)
      .def_readonly("convergence_estimate", &SpectrumResult::convergence_estimate)
      .def("expectation_inv_xi", [](const SpectrumResult& r, std::size_t level) { return expectation_inv_xi(r, level); },
           py::arg("level"))
      .def("to_csv", [](const SpectrumResult& r, int levels) { return to_csv(r, levels); }, py::arg("levels"));

  m.def(
      "spectrum",
      [](double gamma, double a, int n_basis, bool estimate_convergence, int min_levels) {
        SpectrumOptions opts;
        opts.estimate_convergence = estimate_convergence;
        opts.min_levels = min_levels;
        return spectrum({gamma, a}, n_basis, opts);
      },
      py::arg("gamma"), py::arg("a"), py::arg("n_basis") = kDefaultBasisSize, py::arg("estimate_convergence") = true,
      py::arg("min_levels") = 1, "Rayleigh-Ritz eigenvalues W_0 < W_1 < ... for given gamma and a.");

  py::class_<HFReport>(m, "HFReport")
      .def_readonly("a", &HFReport::a)
      .def_readonly("gamma", &HFReport::gamma)
      .def_readonly("level", &HFReport::level)
      .def_readonly("h", &HFReport::h)
      .def_readonly("fd_slope", &HFReport::fd_slope)
      .def_readonly("expectation_inv_xi", &HFReport::expectation_inv_xi)
      .def_readonly("residual", &HFReport::residual)
      .def_readonly("min_overlap", &HFReport::min_overlap)
      .def_readonly("crossing_suspected", &HFReport::crossing_suspected)
      .def("to_dict", [](const HFReport& r) { return json_to_dict(to_json(r)); });

  m.def(
      "hellmann_feynman_check",
      [](double gamma, double a, int level, int n_basis, double h) {
        return hellmann_feynman_check({gamma, a}, level, n_basis, h);
      },
      py::arg("gamma"), py::arg("a"), py::arg("level") = 0, py::arg("n_basis") = kDefaultBasisSize,
      py::arg("h") = kDefaultFdStep);

  py::class_<TruncationMatch>(m, "TruncationMatch")
      .def_readonly("n", &TruncationMatch::n)
      .def_readonly("k", &TruncationMatch::k)
      .def_readonly("a_root", &TruncationMatch::a_root)
      .def_readonly("W_truncation", &TruncationMatch::W_truncation)
      .def_readonly("matched_level", &TruncationMatch::matched_level)
      .def_readonly("W_variational", &TruncationMatch::W_variational)
      .def_readonly("mismatch", &TruncationMatch::mismatch)
      .def_readonly("usable_N", &TruncationMatch::usable_N);

  m.def("truncation_point_locator", &truncation_point_locator, py::arg("n"), py::arg("gamma") = 0.0,
        py::arg("n_basis") = kDefaultBasisSize);

  py::class_<DisclinationParams>(m, "DisclinationParams")
      .def(py::init([](double m_star, double q, double B, double alpha, double kappa, double epsilon, double hbar,
                       double c, int l, double k) {
             return DisclinationParams{m_star, q, B, alpha, kappa, epsilon, hbar, c, l, k};
           }),
           py::kw_only(), py::arg("m_star") = 1.0, py::arg("q") = 1.0, py::arg("B") = 1.0, py::arg("alpha") = 1.0,
           py::arg("kappa") = 0.0, py::arg("epsilon") = 1.0, py::arg("hbar") = 1.0, py::arg("c") = 1.0,
           py::arg("l") = 0, py::arg("k") = 0.0)
      .def_readwrite("m_star", &DisclinationParams::m_star)
      .def_readwrite("q", &DisclinationParams::q)
      .def_readwrite("B", &DisclinationParams::B)
      .def_readwrite("alpha", &DisclinationParams::alpha)
      .def_readwrite("kappa", &DisclinationParams::kappa)
      .def_readwrite("epsilon", &DisclinationParams::epsilon)
      .def_readwrite("hbar", &DisclinationParams::hbar)
      .def_readwrite("c", &DisclinationParams::c)
      .def_readwrite("l", &DisclinationParams::l)
      .def_readwrite("k", &DisclinationParams::k);

  py::class_<DimensionlessImage>(m, "DimensionlessImage")
      .def_readonly("length_unit", &DimensionlessImage::length_unit)
      .def_readonly("gamma", &DimensionlessImage::gamma)
      .def_readonly("a", &DimensionlessImage::a)
      .def_readonly("w_scale", &DimensionlessImage::w_scale)
      .def_readonly("w_offset", &DimensionlessImage::w_offset);

  m.def("to_dimensionless", &to_dimensionless, py::arg("params"));
  m.def("W_from_energy", &W_from_energy, py::arg("params"), py::arg("E"));
  m.def("energy_from_W", &energy_from_W, py::arg("params"), py::arg("W"));
  m.def("field_for_strength", &field_for_strength, py::arg("params"), py::arg("a"));

  py::class_<AllowedField>(m, "AllowedField")
      .def_readonly("k", &AllowedField::k)
      .def_readonly("a_root", &AllowedField::a_root)
      .def_readonly("B", &AllowedField::B);
  py::class_<AllowedFieldReport>(m, "AllowedFieldReport")
      .def_readonly("n", &AllowedFieldReport::n)
      .def_readonly("l", &AllowedFieldReport::l)
      .def_readonly("gamma", &AllowedFieldReport::gamma)
      .def_readonly("fields", &AllowedFieldReport::fields)
      .def_readonly("unphysical_roots", &AllowedFieldReport::unphysical_roots);
  m.def("allowed_field_strengths", &allowed_field_strengths, py::arg("params"), py::arg("n"));

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("a", &SweepRow::a)
      .def_readonly("W", &SweepRow::W)
      .def_readonly("usable_N", &SweepRow::usable_N)
      .def_readonly("max_convergence", &SweepRow::max_convergence)
      .def_readonly("status", &SweepRow::status);
  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("n", &SweepPoint::n)
      .def_readonly("k", &SweepPoint::k)
      .def_readonly("a_root", &SweepPoint::a_root)
      .def_readonly("W", &SweepPoint::W)
      .def_readonly("matched_level", &SweepPoint::matched_level)
      .def_readonly("W_variational", &SweepPoint::W_variational)
      .def_readonly("mismatch", &SweepPoint::mismatch);
  py::class_<SweepTable>(m, "SweepTable")
      .def_readonly("rows", &SweepTable::rows)
      .def_readonly("points", &SweepTable::points)
      .def("curves_csv", [](const SweepTable& t) { return sweep_curves_csv(t); })
      .def("points_csv", [](const SweepTable& t) { return sweep_points_csv(t); })
      .def("to_dict", [](const SweepTable& t) { return json_to_dict(sweep_json(t)); })
      .def("svg", [](const SweepTable& t) { return sweep_svg(t); });

  m.def(
      "compute_sweep",
      [](double gamma, double a_min, double a_max, int steps, int levels, int n_max, int n_basis, unsigned threads) {
        SweepConfig c;
        c.gamma = gamma;
        c.a_min = a_min;
        c.a_max = a_max;
        c.steps = steps;
        c.levels = levels;
        c.n_max = n_max;
        c.basis_size = n_basis;
        c.threads = threads;
        py::gil_scoped_release release;
        return compute_sweep(c);
      },
      py::arg("gamma") = 0.0, py::arg("a_min") = -8.0, py::arg("a_max") = 8.0, py::arg("steps") = 161,
      py::arg("levels") = 5, py::arg("n_max") = 6, py::arg("n_basis") = kDefaultBasisSize, py::arg("threads") = 0);
}

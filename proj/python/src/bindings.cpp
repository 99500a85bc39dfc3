#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphene_cp/analysis.hpp"
#include "graphene_cp/io.hpp"
#include "graphene_cp/version.hpp"

namespace py = pybind11;
using namespace gcp;

namespace {

std::optional<PolarizabilityModel> pol_from(std::optional<double> alpha0) {
  if (!alpha0) return std::nullopt;
  return PolarizabilityModel::static_model(*alpha0);
}

py::dict table_dict(const CurveTable& t) {
  py::dict d;
  d["abscissa_name"] = t.abscissa_name;
  d["abscissa"] = t.abscissa;
  py::dict curves;
  for (size_t c = 0; c < t.curves.size(); ++c)
    curves[py::str(t.curve_names[c])] = t.curves[c];
  d["curves"] = curves;
  d["temp_k"] = t.meta.temp_k;
  d["rel_tol"] = t.meta.rel_tol;
  d["version"] = t.meta.version;
  return d;
}

py::list crossing_list(const std::vector<Crossing>& cs) {
  py::list out;
  for (const auto& c : cs) {
    py::dict d;
    d["curve"] = c.curve;
    d["a_um"] = c.a_um;
    d["always_within"] = c.always_within;
    d["never_within"] = c.never_within;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Casimir-Polder force between a small particle and a gapped, "
            "doped graphene sheet";
  m.attr("__version__") = kVersion;

  py::class_<Geometry>(m, "Geometry")
      .def(py::init<double, double>(), py::arg("separation_um"),
           py::arg("temperature_k"))
      .def_readonly("separation_a", &Geometry::separation_a)
      .def_readonly("temperature_T", &Geometry::temperature_T);

  py::class_<GrapheneSheet>(m, "GrapheneSheet")
      .def(py::init<double, double>(), py::arg("gap_ev"), py::arg("mu_ev"))
      .def(py::init<double, double, double>(), py::arg("gap_ev"),
           py::arg("mu_ev"), py::arg("vf_ratio"))
      .def_readonly("gap_delta", &GrapheneSheet::gap_delta)
      .def_readonly("chem_potential_mu", &GrapheneSheet::chem_potential_mu)
      .def_readonly("fermi_ratio", &GrapheneSheet::fermi_ratio);

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
      .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
      .def_readwrite("max_panels", &QuadratureConfig::max_panels)
      .def_readwrite("matsubara_rel_tail", &QuadratureConfig::matsubara_rel_tail)
      .def_readwrite("matsubara_max_l", &QuadratureConfig::matsubara_max_l)
      .def_readwrite("consecutive_small", &QuadratureConfig::consecutive_small);

  py::class_<TensorPoint>(m, "TensorPoint")
      .def_readonly("zeta_l", &TensorPoint::zeta_l)
      .def_readonly("y", &TensorPoint::y)
      .def_readonly("p_l", &TensorPoint::p_l)
      .def_readonly("d_l", &TensorPoint::d_l)
      .def_readonly("b_l", &TensorPoint::b_l);

  py::class_<ForceResult>(m, "ForceResult")
      .def_readonly("reduced_force", &ForceResult::reduced_force)
      .def_readonly("absolute_force", &ForceResult::absolute_force)
      .def_readonly("terms_used", &ForceResult::terms_used)
      .def_readonly("est_rel_error", &ForceResult::est_rel_error)
      .def("__repr__", [](const ForceResult& r) {
        return "ForceResult(reduced_force=" + format_number(r.reduced_force) +
               ", terms_used=" + std::to_string(r.terms_used) + ")";
      });

  py::enum_<RegimeTag>(m, "RegimeTag")
      .value("large_gap", RegimeTag::large_gap)
      .value("small_gap", RegimeTag::small_gap)
      .value("zero_gap", RegimeTag::zero_gap)
      .value("pristine", RegimeTag::pristine);

  py::class_<AsymptoticRegime>(m, "AsymptoticRegime")
      .def_readonly("tag", &AsymptoticRegime::tag)
      .def_readonly("d0", &AsymptoticRegime::d0)
      .def_readonly("thermal_param", &AsymptoticRegime::thermal_param)
      .def_readonly("marginal", &AsymptoticRegime::marginal)
      .def_readonly("thermal_warn", &AsymptoticRegime::thermal_warn);

  py::register_exception<QuadratureError>(m, "QuadratureError");
  py::register_exception<RegimeError>(m, "RegimeError");
  py::register_exception<BracketError>(m, "BracketError");

  m.def("characteristic_energy", &characteristic_energy, py::arg("geometry"));
  m.def("matsubara_zeta", &matsubara_zeta, py::arg("l"), py::arg("geometry"));
  m.def("thermal_parameter", &thermal_parameter, py::arg("geometry"),
        py::arg("sheet"));
  m.def("psi", &psi, py::arg("x"));
  m.def("fermi_weight", &fermi_weight, py::arg("u"), py::arg("b_l"),
        py::arg("mu_over_kT"));
  m.def("tensor_point", &tensor_point, py::arg("zeta_l"), py::arg("y"),
        py::arg("sheet"), py::arg("geometry"));

  m.def(
      "pi00",
      [](double zeta_l, double y, const GrapheneSheet& s, const Geometry& g,
         const QuadratureConfig& q) {
        return pi00(tensor_point(zeta_l, y, s, g), s, g, q);
      },
      py::arg("zeta_l"), py::arg("y"), py::arg("sheet"), py::arg("geometry"),
      py::arg("config") = QuadratureConfig{});
  m.def(
      "pi_combo",
      [](double zeta_l, double y, const GrapheneSheet& s, const Geometry& g,
         const QuadratureConfig& q) {
        return pi_combo(tensor_point(zeta_l, y, s, g), s, g, q);
      },
      py::arg("zeta_l"), py::arg("y"), py::arg("sheet"), py::arg("geometry"),
      py::arg("config") = QuadratureConfig{});
  m.def("pi00_zero", &pi00_zero, py::arg("y"), py::arg("sheet"),
        py::arg("geometry"), py::arg("config") = QuadratureConfig{});
  m.def(
      "dielectric_functions",
      [](double zeta_l, double y, const GrapheneSheet& s, const Geometry& g,
         const QuadratureConfig& q) {
        const DielectricPair p =
            dielectric_functions(tensor_point(zeta_l, y, s, g), s, g, q);
        return py::make_tuple(p.eps_longitudinal, p.eps_transverse);
      },
      py::arg("zeta_l"), py::arg("y"), py::arg("sheet"), py::arg("geometry"),
      py::arg("config") = QuadratureConfig{});
  m.def(
      "reflection_at",
      [](double zeta_l, double y, const GrapheneSheet& s, const Geometry& g,
         const QuadratureConfig& q) {
        const ReflectionPair r =
            reflection_at(tensor_point(zeta_l, y, s, g), s, g, q);
        return py::make_tuple(r.r_tm, r.r_te);
      },
      py::arg("zeta_l"), py::arg("y"), py::arg("sheet"), py::arg("geometry"),
      py::arg("config") = QuadratureConfig{});
  m.def("r_tm_zero", &r_tm_zero, py::arg("y"), py::arg("sheet"),
        py::arg("geometry"), py::arg("config") = QuadratureConfig{});

  m.def("term_l", &term_l, py::arg("l"), py::arg("sheet"), py::arg("geometry"),
        py::arg("config") = QuadratureConfig{});
  m.def(
      "force_total",
      [](const GrapheneSheet& s, const Geometry& g,
         std::optional<double> alpha0, const QuadratureConfig& q) {
        return force_total(s, g, pol_from(alpha0), q);
      },
      py::arg("sheet"), py::arg("geometry"),
      py::arg("alpha0_um3") = std::nullopt,
      py::arg("config") = QuadratureConfig{});
  m.def(
      "force_zero_term",
      [](const GrapheneSheet& s, const Geometry& g,
         std::optional<double> alpha0, const QuadratureConfig& q) {
        return force_zero_term(s, g, pol_from(alpha0), q);
      },
      py::arg("sheet"), py::arg("geometry"),
      py::arg("alpha0_um3") = std::nullopt,
      py::arg("config") = QuadratureConfig{});
  m.def(
      "force_ideal_metal",
      [](const Geometry& g, double alpha0) {
        return force_ideal_metal(g, PolarizabilityModel::static_model(alpha0));
      },
      py::arg("geometry"), py::arg("alpha0_um3"));
  m.def("delta_f0", &delta_f0, py::arg("sheet"), py::arg("geometry"),
        py::arg("config") = QuadratureConfig{});

  m.def("classify_regime", &classify_regime, py::arg("sheet"),
        py::arg("geometry"));
  m.def("pi00_asymptotic", &pi00_asymptotic, py::arg("sheet"),
        py::arg("geometry"));
  m.def(
      "force_asymptotic",
      [](const GrapheneSheet& s, const Geometry& g,
         std::optional<double> alpha0) {
        return force_asymptotic(s, g, pol_from(alpha0));
      },
      py::arg("sheet"), py::arg("geometry"),
      py::arg("alpha0_um3") = std::nullopt);
  m.def("psi_expansion_check", &psi_expansion_check, py::arg("d0"));
  m.def("appendix_integral", &appendix_integral, py::arg("d0"));

  m.def(
      "find_a0",
      [](const GrapheneSheet& s, double temp_k, double threshold, double a_lo,
         double a_hi, double tol_um, const QuadratureConfig& q) {
        const A0Result r = find_a0(s, temp_k, threshold, a_lo, a_hi, tol_um, q);
        return py::make_tuple(r.a0_um, r.ratio_at_a0);
      },
      py::arg("sheet"), py::arg("temp_k"), py::arg("threshold") = 0.99,
      py::arg("a_lo_um") = 1.0, py::arg("a_hi_um") = 7.6,
      py::arg("tol_um") = 0.01, py::arg("config") = QuadratureConfig{});

  m.def(
      "scan_a0_vs_gap",
      [](const std::vector<double>& gaps, const std::vector<double>& mus,
         double temp_k, double vf_ratio, const QuadratureConfig& q) {
        ScanSpec spec = ScanSpec::defaults();
        if (!gaps.empty()) spec.gaps_ev = gaps;
        if (!mus.empty()) spec.mus_ev = mus;
        spec.temp_k = temp_k;
        spec.vf_ratio = vf_ratio;
        return table_dict(scan_a0_vs_gap(spec, q));
      },
      py::arg("gaps_ev") = std::vector<double>{},
      py::arg("mus_ev") = std::vector<double>{}, py::arg("temp_k") = 300.0,
      py::arg("vf_ratio") = 1.0 / 300.0,
      py::arg("config") = QuadratureConfig{});
  m.def(
      "scan_delta_f0",
      [](double gap_ev, const std::vector<double>& mus, double a_min,
         double a_max, int points, double temp_k, double vf_ratio,
         const QuadratureConfig& q) {
        ScanSpec spec = ScanSpec::defaults();
        spec.gaps_ev = {gap_ev};
        if (!mus.empty()) spec.mus_ev = mus;
        spec.a_min_um = a_min;
        spec.a_max_um = a_max;
        spec.points = points;
        spec.temp_k = temp_k;
        spec.vf_ratio = vf_ratio;
        const DeltaF0Scan scan = scan_delta_f0(spec, q);
        py::dict d = table_dict(scan.table);
        d["crossings_1pct"] = crossing_list(scan.crossings);
        return d;
      },
      py::arg("gap_ev"), py::arg("mus_ev") = std::vector<double>{},
      py::arg("a_min_um") = 3.0, py::arg("a_max_um") = 100.0,
      py::arg("points") = 40, py::arg("temp_k") = 300.0,
      py::arg("vf_ratio") = 1.0 / 300.0,
      py::arg("config") = QuadratureConfig{});
  m.def(
      "scan_exact_vs_asymptotic",
      [](double gap_ev, const std::vector<double>& mus, double a_min,
         double a_max, int points, double temp_k, double vf_ratio,
         const QuadratureConfig& q) {
        ScanSpec spec = ScanSpec::defaults();
        spec.gaps_ev = {gap_ev};
        if (!mus.empty()) spec.mus_ev = mus;
        spec.a_min_um = a_min;
        spec.a_max_um = a_max;
        spec.points = points;
        spec.temp_k = temp_k;
        spec.vf_ratio = vf_ratio;
        const RatioScan scan = scan_exact_vs_asymptotic(spec, q);
        py::dict d = table_dict(scan.table);
        d["crossings_1pct"] = crossing_list(scan.crossings_1pct);
        d["crossings_2pct"] = crossing_list(scan.crossings_2pct);
        return d;
      },
      py::arg("gap_ev"), py::arg("mus_ev") = std::vector<double>{},
      py::arg("a_min_um") = 3.0, py::arg("a_max_um") = 100.0,
      py::arg("points") = 40, py::arg("temp_k") = 300.0,
      py::arg("vf_ratio") = 1.0 / 300.0,
      py::arg("config") = QuadratureConfig{});
}

#include "graphene_cp/units.hpp"

#include <numbers>
#include <stdexcept>

#include "graphene_cp/sheet.hpp"

namespace gcp {

const PhysicalConstants& constants() {
  static const PhysicalConstants c;
  return c;
}

Geometry::Geometry(double a_um, double temp_k)
    : separation_a(a_um), temperature_T(temp_k) {
  if (!(a_um > 0.0))
    throw std::invalid_argument("separation must be positive");
  if (!(temp_k > 0.0))
    throw std::invalid_argument("temperature must be positive");
}

GrapheneSheet::GrapheneSheet(double gap_ev, double mu_ev)
    : GrapheneSheet(gap_ev, mu_ev, constants().default_fermi_ratio) {}

GrapheneSheet::GrapheneSheet(double gap_ev, double mu_ev, double vf_ratio)
    : gap_delta(gap_ev), chem_potential_mu(mu_ev), fermi_ratio(vf_ratio) {
  if (!(gap_ev >= 0.0)) throw std::invalid_argument("gap must be >= 0");
  if (!(mu_ev >= 0.0))
    throw std::invalid_argument("chemical potential must be >= 0");
  if (!(vf_ratio > 0.0 && vf_ratio < 1.0))
    throw std::invalid_argument("fermi_ratio must lie in (0, 1)");
}

double characteristic_energy(const Geometry& g) {
  return constants().hbar_c / (2.0 * g.separation_a);
}

double matsubara_zeta(int l, const Geometry& g) {
  if (l < 0) throw std::invalid_argument("matsubara index must be >= 0");
  return 4.0 * std::numbers::pi * g.separation_a * constants().boltzmann *
         g.temperature_T * l / constants().hbar_c;
}

double thermal_parameter(const Geometry& g, const GrapheneSheet& sheet) {
  return constants().boltzmann * g.temperature_T /
         (sheet.fermi_ratio * characteristic_energy(g));
}

}

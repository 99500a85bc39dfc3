#pragma once

namespace gcp {

// Energies are eV, lengths um, temperatures K at every external interface.
// Everything past the interface works on dimensionless combinations of these.
struct PhysicalConstants {
  double hbar_c = 0.19732697;               // eV um
  double boltzmann = 8.617333e-5;           // eV / K
  double fine_structure = 7.2973525693e-3;  // e^2 / (hbar c)
  double default_fermi_ratio = 1.0 / 300.0; // v_F / c for graphene
};

const PhysicalConstants& constants();

struct Geometry {
  double separation_a;   // um, > 0
  double temperature_T;  // K, > 0

  Geometry(double a_um, double temp_k);
};

struct GrapheneSheet;

// hbar omega_c = hbar c / (2a), the energy scale set by the separation.
double characteristic_energy(const Geometry& g);

// Dimensionless Matsubara frequency zeta_l = 4 pi a kB T l / (hbar c).
// Zero at l = 0 and strictly increasing in l.
double matsubara_zeta(int l, const Geometry& g);

// kB T / (vF hbar omega_c), the parameter that must be large for the
// thermal closed forms to hold.
double thermal_parameter(const Geometry& g, const GrapheneSheet& sheet);

}

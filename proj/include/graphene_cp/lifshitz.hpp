#pragma once

#include <functional>
#include <optional>

#include "graphene_cp/reflection.hpp"

namespace gcp {

// Particle polarizability along the imaginary frequency axis, um^3 as a
// function of energy in eV. The zero-frequency value sets the scale of the
// reduced force.
struct PolarizabilityModel {
  std::function<double(double omega_ev)> eval;

  double alpha0() const { return eval(0.0); }
  static PolarizabilityModel static_model(double alpha0_um3);
};

struct ForceResult {
  // phi = -8 a^4 F / (kB T alpha0); positive for attraction, 6 for an ideal
  // metal at large separation.
  double reduced_force = 0.0;
  std::optional<double> absolute_force;  // eV / um, negative for attraction
  int terms_used = 0;
  double est_rel_error = 0.0;
};

// Reflection pair as a function of (zeta_l, y). Lets tests and toy mirrors
// drive the same summation code as the graphene sheet.
using ReflectionFn = std::function<ReflectionPair(double zeta_l, double y)>;

// One Matsubara term: integral over y in [zeta_l, inf) of
// y e^{-y} [(2y^2 - zeta_l^2) r_tm - zeta_l^2 r_te]. Not halved at l = 0.
double term_l(int l, const GrapheneSheet& sheet, const Geometry& g,
              const QuadratureConfig& q);
double term_l_with(double zeta_l, const ReflectionFn& refl,
                   const QuadratureConfig& q, double abs_tol = 0.0);

// Full finite-temperature sum with the l = 0 term halved. If pol is present
// each term is weighted by alpha(zeta_l hbar omega_c)/alpha(0) and the
// absolute force in eV/um is filled in.
ForceResult force_total(const GrapheneSheet& sheet, const Geometry& g,
                        const std::optional<PolarizabilityModel>& pol,
                        const QuadratureConfig& q);
ForceResult force_total_with(const ReflectionFn& refl, const Geometry& g,
                             const std::optional<PolarizabilityModel>& pol,
                             const QuadratureConfig& q);

// Zero-frequency contribution alone (the halved l = 0 term).
ForceResult force_zero_term(const GrapheneSheet& sheet, const Geometry& g,
                            const std::optional<PolarizabilityModel>& pol,
                            const QuadratureConfig& q);
ForceResult force_zero_term_with(const ReflectionFn& refl, const Geometry& g,
                                 const std::optional<PolarizabilityModel>& pol,
                                 const QuadratureConfig& q);

// Large-separation ideal-metal value -3 kB T alpha0 / (4 a^4), eV/um.
// Its reduced form is the constant 6.
double force_ideal_metal(const Geometry& g, const PolarizabilityModel& pol);

// (F0 - F0_ideal) / F0_ideal. Independent of the polarizability scale.
double delta_f0(const GrapheneSheet& sheet, const Geometry& g,
                const QuadratureConfig& q);

}

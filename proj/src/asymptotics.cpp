#include "graphene_cp/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "internal_math.hpp"

namespace gcp {

namespace {

using internal::kLn2;
using internal::logcosh;

struct Scales {
  double c_log;   // 8 alpha kB T / (vF^2 hbar omega_c)
  double kT;
  double a_big;   // (Delta + 2 mu) / (4 kB T)
  double b_big;   // (Delta - 2 mu) / (4 kB T)
};

Scales scales(const GrapheneSheet& sheet, const Geometry& g) {
  Scales s;
  s.kT = constants().boltzmann * g.temperature_T;
  s.c_log = 8.0 * constants().fine_structure * s.kT /
            (sheet.fermi_ratio * sheet.fermi_ratio * characteristic_energy(g));
  s.a_big = (sheet.gap_delta + 2.0 * sheet.chem_potential_mu) / (4.0 * s.kT);
  s.b_big = (sheet.gap_delta - 2.0 * sheet.chem_potential_mu) / (4.0 * s.kT);
  return s;
}

}  // namespace

const char* regime_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::large_gap: return "large_gap";
    case RegimeTag::small_gap: return "small_gap";
    case RegimeTag::zero_gap: return "zero_gap";
    case RegimeTag::pristine: return "pristine";
  }
  return "unknown";
}

AsymptoticRegime classify_regime(const GrapheneSheet& sheet,
                                 const Geometry& g) {
  AsymptoticRegime r;
  r.d0 = sheet.gap_delta /
         (sheet.fermi_ratio * characteristic_energy(g));
  r.thermal_param = thermal_parameter(g, sheet);
  r.thermal_warn = r.thermal_param < 10.0;
  r.marginal = false;
  if (sheet.gap_delta == 0.0) {
    r.tag = sheet.chem_potential_mu == 0.0 ? RegimeTag::pristine
                                           : RegimeTag::zero_gap;
  } else if (r.d0 >= 10.0) {
    r.tag = RegimeTag::large_gap;
  } else if (r.d0 <= 0.1) {
    r.tag = RegimeTag::small_gap;
  } else {
    // inside the band neither expansion is controlled; pick the closer edge
    // on the log scale and say so
    r.marginal = true;
    const double to_large = std::fabs(std::log(r.d0 / 10.0));
    const double to_small = std::fabs(std::log(r.d0 / 0.1));
    r.tag = to_large <= to_small ? RegimeTag::large_gap : RegimeTag::small_gap;
  }
  return r;
}

double pi00_large_gap(const GrapheneSheet& sheet, const Geometry& g) {
  const Scales s = scales(sheet, g);
  const double x = sheet.gap_delta / (4.0 * s.kT);
  return s.c_log * (2.0 * kLn2 + logcosh(s.a_big) + logcosh(s.b_big) -
                    x * (std::tanh(s.a_big) + std::tanh(s.b_big)));
}

double pi00_large_gap_raw(const GrapheneSheet& sheet, const Geometry& g) {
  const Scales s = scales(sheet, g);
  const double kT = s.kT;
  const double half_gap = 0.5 * sheet.gap_delta / kT;
  const double mu_hat = sheet.chem_potential_mu / kT;
  const double lnwp = internal::log_weight_product(sheet, kT);
  const double carriers = internal::fermi(half_gap + mu_hat) +
                          internal::fermi(half_gap - mu_hat);
  const double coef = 4.0 * constants().fine_structure * sheet.gap_delta /
                      (sheet.fermi_ratio * sheet.fermi_ratio *
                       characteristic_energy(g));
  return s.c_log * lnwp + coef * carriers;
}

double pi00_large_gap_mu0(const GrapheneSheet& sheet, const Geometry& g) {
  const Scales s = scales(sheet, g);
  const double x = sheet.gap_delta / (4.0 * s.kT);
  return 2.0 * s.c_log * (kLn2 + logcosh(x) - x * std::tanh(x));
}

double pi00_small_gap(const GrapheneSheet& sheet, const Geometry& g) {
  const Scales s = scales(sheet, g);
  return s.c_log * (2.0 * kLn2 + logcosh(s.a_big) + logcosh(s.b_big));
}

double pi00_zero_gap(const GrapheneSheet& sheet, const Geometry& g) {
  const Scales s = scales(sheet, g);
  const double half_mu = sheet.chem_potential_mu / (2.0 * s.kT);
  return 2.0 * s.c_log * (kLn2 + logcosh(half_mu));
}

double pi00_pristine(const GrapheneSheet& sheet, const Geometry& g) {
  const Scales s = scales(sheet, g);
  return 2.0 * s.c_log * kLn2;
}

double pi00_asymptotic(const GrapheneSheet& sheet, const Geometry& g) {
  const AsymptoticRegime r = classify_regime(sheet, g);
  if (r.thermal_param < 1.0)
    throw RegimeError(
        "thermal parameter " + std::to_string(r.thermal_param) +
        " < 1: no large-separation closed form applies at this separation");
  switch (r.tag) {
    case RegimeTag::pristine: return pi00_pristine(sheet, g);
    case RegimeTag::zero_gap: return pi00_zero_gap(sheet, g);
    case RegimeTag::small_gap: return pi00_small_gap(sheet, g);
    case RegimeTag::large_gap: return pi00_large_gap(sheet, g);
  }
  throw RegimeError("unreachable regime tag");
}

ForceResult force_asymptotic(const GrapheneSheet& sheet, const Geometry& g,
                             const std::optional<PolarizabilityModel>& pol) {
  const double p00 = pi00_asymptotic(sheet, g);
  ForceResult out;
  out.reduced_force = 6.0 * (1.0 - 8.0 / p00);
  out.terms_used = 1;
  out.est_rel_error = 0.0;
  if (pol) {
    if (!(pol->alpha0() > 0.0))
      throw std::invalid_argument("polarizability at zero frequency must be positive");
    const double kT = constants().boltzmann * g.temperature_T;
    const double a = g.separation_a;
    out.absolute_force =
        -kT * pol->alpha0() * out.reduced_force / (8.0 * a * a * a * a);
  }
  return out;
}

double psi_expansion_check(double d0) {
  if (!(d0 > 0.0)) throw std::domain_error("needs d0 > 0");
  return psi(d0) * 3.0 * d0 / 8.0;
}

double appendix_integral(double d0) {
  if (!(d0 >= 0.0)) throw std::domain_error("needs d0 >= 0");
  // atan(d0) - pi/2 written as -atan(1/d0) so large d0 keeps precision
  if (d0 == 0.0) return std::numbers::pi / 4.0;
  return -0.5 * d0 - 0.5 * (d0 * d0 - 1.0) * std::atan(1.0 / d0);
}

}

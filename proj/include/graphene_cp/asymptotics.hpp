#pragma once

#include <stdexcept>
#include <string>

#include "graphene_cp/lifshitz.hpp"

namespace gcp {

enum class RegimeTag { large_gap, small_gap, zero_gap, pristine };

const char* regime_name(RegimeTag tag);

struct AsymptoticRegime {
  RegimeTag tag;
  double d0;             // gap parameter 2 a Delta / (hbar c vF) at y = 1
  double thermal_param;  // kB T / (vF hbar omega_c)
  bool marginal;         // d0 in the (0.1, 10) band, tag is nearest in log
  bool thermal_warn;     // thermal_param < 10: closed forms degrade
};

class RegimeError : public std::runtime_error {
public:
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

AsymptoticRegime classify_regime(const GrapheneSheet& sheet, const Geometry& g);

// Large-separation closed forms for the zero-frequency 00 tensor entry at
// y = 1. All of them are even in mu and safe against exp overflow.
double pi00_large_gap(const GrapheneSheet& sheet, const Geometry& g);
// The same quantity before the cosh/tanh rearrangement; kept as a cross-check.
double pi00_large_gap_raw(const GrapheneSheet& sheet, const Geometry& g);
double pi00_large_gap_mu0(const GrapheneSheet& sheet, const Geometry& g);
double pi00_small_gap(const GrapheneSheet& sheet, const Geometry& g);
double pi00_zero_gap(const GrapheneSheet& sheet, const Geometry& g);
double pi00_pristine(const GrapheneSheet& sheet, const Geometry& g);

// Dispatch on classify_regime. Throws RegimeError when thermal_param < 1;
// the AsymptoticRegime carries the warn flag for the band [1, 10).
double pi00_asymptotic(const GrapheneSheet& sheet, const Geometry& g);

// Large-separation force 6 (1 - 8 / pi00_asymptotic) in reduced form.
ForceResult force_asymptotic(const GrapheneSheet& sheet, const Geometry& g,
                             const std::optional<PolarizabilityModel>& pol);

// psi(d0) 3 d0 / 8 -> 1 as d0 grows; quantifies the leading-order decay.
double psi_expansion_check(double d0);

// Closed form of int_{d0}^{sqrt(1+d0^2)} (1 - u^2) / sqrt(1 - u^2 + d0^2) du.
double appendix_integral(double d0);

}

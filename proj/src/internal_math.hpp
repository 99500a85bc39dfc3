#pragma once

#include <cmath>

#include "graphene_cp/sheet.hpp"

namespace gcp::internal {

inline constexpr double kLn2 = 0.6931471805599453094;

// log(cosh(x)) without overflow: |x| - ln 2 + log1p(e^{-2|x|}).
inline double logcosh(double x) {
  const double ax = std::fabs(x);
  return ax - kLn2 + std::log1p(std::exp(-2.0 * ax));
}

// ln[(e^{-Delta/2kT} + e^{mu/kT})(e^{-Delta/2kT} + e^{-mu/kT})] rewritten so
// no exponential is ever taken of a large positive or negative argument:
// 2 ln 2 + logcosh((Delta+2mu)/4kT) + logcosh((Delta-2mu)/4kT) - Delta/2kT.
inline double log_weight_product(const GrapheneSheet& sheet, double kT) {
  const double A = (sheet.gap_delta + 2.0 * sheet.chem_potential_mu) / (4.0 * kT);
  const double B = (sheet.gap_delta - 2.0 * sheet.chem_potential_mu) / (4.0 * kT);
  return 2.0 * kLn2 + logcosh(A) + logcosh(B) - sheet.gap_delta / (2.0 * kT);
}

// Fermi function with a stable tail on both sides.
inline double fermi(double x) {
  if (x >= 0.0) {
    const double t = std::exp(-x);
    return t / (1.0 + t);
  }
  return 1.0 / (1.0 + std::exp(x));
}

}

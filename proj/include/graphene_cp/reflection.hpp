#pragma once

#include "graphene_cp/polarization.hpp"

namespace gcp {

struct ReflectionPair {
  double r_tm;  // in [0, 1]
  double r_te;  // in [-1, 0]
};

// Both Fresnel-type coefficients of the sheet at a tensor point. At the
// degenerate edge y = zeta_l the coefficients take their limiting values
// (r_tm -> 1, r_te -> -1 whenever the corresponding tensor entry is finite
// and positive, else 0).
ReflectionPair reflection_at(const TensorPoint& pt, const GrapheneSheet& sheet,
                             const Geometry& g, const QuadratureConfig& q);

// Zero-frequency TM coefficient P / (P + 2y) with P = pi00_zero. The TE
// coefficient vanishes identically at zero frequency.
double r_tm_zero(double y, const GrapheneSheet& sheet, const Geometry& g,
                 const QuadratureConfig& q);

// Same quantity computed as 1 - 2y / (P + 2y); kept separate so the algebra
// can be cross-checked.
double r_tm_zero_variant(double y, const GrapheneSheet& sheet,
                         const Geometry& g, const QuadratureConfig& q);

}

#include "graphene_cp/reflection.hpp"

namespace gcp {

ReflectionPair reflection_at(const TensorPoint& pt, const GrapheneSheet& sheet,
                             const Geometry& g, const QuadratureConfig& q) {
  ReflectionPair out{0.0, 0.0};
  if (pt.y == pt.zeta_l) {
    // Both tensor entries vanish identically on the edge: the momentum
    // prefactors kill the psi terms and the u integral reduces to exactly
    // the logarithmic term divided by b_l. Total reflection would need a
    // positive entry, so the convention resolves to zero for both, without
    // asking the quadrature to decide the sign of an exact cancellation.
    return out;
  }
  const double k2 = (pt.y - pt.zeta_l) * (pt.y + pt.zeta_l);
  if (pt.zeta_l == 0.0) {
    const double p00 = pi00_zero(pt.y, sheet, g, q);
    out.r_tm = pt.y * p00 / (pt.y * p00 + 2.0 * k2);
    return out;  // TE response vanishes with zeta^2
  }
  const double p00 = pi00(pt, sheet, g, q);
  const double pc = pi_combo(pt, sheet, g, q);
  out.r_tm = pt.y * p00 / (pt.y * p00 + 2.0 * k2);
  out.r_te = -pc / (pc + 2.0 * pt.y * k2);
  return out;
}

double r_tm_zero(double y, const GrapheneSheet& sheet, const Geometry& g,
                 const QuadratureConfig& q) {
  const double p00 = pi00_zero(y, sheet, g, q);
  return p00 / (p00 + 2.0 * y);
}

double r_tm_zero_variant(double y, const GrapheneSheet& sheet,
                         const Geometry& g, const QuadratureConfig& q) {
  const double p00 = pi00_zero(y, sheet, g, q);
  return 1.0 - 2.0 * y / (p00 + 2.0 * y);
}

}

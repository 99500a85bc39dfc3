#pragma once

#include "graphene_cp/quadrature.hpp"
#include "graphene_cp/sheet.hpp"
#include "graphene_cp/units.hpp"

namespace gcp {

// Dimensionless point on the imaginary-frequency / transverse-momentum grid.
// y >= zeta_l always; the combination sqrt(y^2 - zeta_l^2) is the scaled
// transverse momentum. d_l * b_l == Delta / (2 kB T) by construction.
struct TensorPoint {
  double zeta_l;  // >= 0
  double y;       // >= zeta_l, > 0
  double p_l;     // sqrt(vF^2 y^2 + (1 - vF^2) zeta_l^2)
  double d_l;     // 2 a Delta / (hbar c p_l)
  double b_l;     // hbar c p_l / (4 a kB T)
};

TensorPoint tensor_point(double zeta_l, double y, const GrapheneSheet& sheet,
                         const Geometry& g);

// psi(x) = 2 [x + (1 - x^2) atan(1/x)]; psi(0) = pi, decays as 8/(3x).
double psi(double x);

// f(b_l u + mu_hat) + f(b_l u - mu_hat) with f the Fermi function. In (0, 2),
// even in the sign of mu_hat.
double fermi_weight(double u, double b_l, double mu_over_kT);

// 00 component of the polarization tensor along the imaginary axis, in the
// dimensionless form that enters the reflection coefficients. Requires
// zeta_l > 0; the zero-frequency limit has its own closed path below.
double pi00(const TensorPoint& pt, const GrapheneSheet& sheet,
            const Geometry& g, const QuadratureConfig& q);

// The combination entering the TE coefficient. Vanishes like zeta_l^2, and
// is defined to return exactly 0 at zeta_l = 0.
double pi_combo(const TensorPoint& pt, const GrapheneSheet& sheet,
                const Geometry& g, const QuadratureConfig& q);

// Zero-frequency 00 component. One smooth single-variable integral after the
// trigonometric substitution, so it is cheap enough to sit inside scans.
double pi00_zero(double y, const GrapheneSheet& sheet, const Geometry& g,
                 const QuadratureConfig& q);

struct DielectricPair {
  double eps_longitudinal;
  double eps_transverse;
};

// Nonlocal dielectric pair at a tensor point. Needs y > zeta_l > 0: the
// transverse function does not exist at zero frequency and both blow up on
// the light cone y = zeta_l.
DielectricPair dielectric_functions(const TensorPoint& pt,
                                    const GrapheneSheet& sheet,
                                    const Geometry& g,
                                    const QuadratureConfig& q);

}

#include "graphene_cp/polarization.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "internal_math.hpp"

namespace gcp {

namespace {

using internal::fermi;

// Thermal weights die like e^{mu_hat - b u}; past this cut the remainder is
// below 1e-20 of anything retained. Kept clear of the branch point and of
// the lower endpoint so the split logic stays simple.
double upper_cut(double lo, double ustar, double b_l, double mu_hat) {
  double ucut = (46.0 + std::max(mu_hat, 0.0)) / b_l;
  ucut = std::max(ucut, 1.5 * ustar);
  ucut = std::max(ucut, lo + 1.0);
  return ucut;
}

struct UResult {
  double value;
  double err;
};

// The integrands carry an inverse square root reaching zero at
// ustar = sqrt(1 + m2/p^2) when zeta -> 0 (and a sharp regularized spike
// there for small zeta > 0). Substituting u = ustar -+ s^2 on the two sides
// makes both pieces smooth; away from the window the plain range is fine.
template <class F>
UResult branch_split_integral(F&& f, double lo, double ustar, double ucut,
                              double rel, int max_panels) {
  UResult out{0.0, 0.0};
  if (ustar > lo && ustar < ucut) {
    const double s_lo = std::sqrt(ustar - lo);
    auto below = integrate(
        [&](double s) { return f(ustar - s * s) * 2.0 * s; }, 0.0, s_lo, rel,
        0.0, max_panels);
    const double s_hi = std::sqrt(ucut - ustar);
    auto above = integrate(
        [&](double s) { return f(ustar + s * s) * 2.0 * s; }, 0.0, s_hi, rel,
        0.0, max_panels);
    out.value = below.value + above.value;
    out.err = below.abs_err + above.abs_err;
  } else {
    auto whole = integrate(f, lo, ucut, rel, 0.0, max_panels);
    out.value = whole.value;
    out.err = whole.abs_err;
  }
  return out;
}

// Tolerance for the u integrals nested inside the frequency integral. The
// tensor value near y = zeta_l is a small difference of large pieces, so the
// inner tolerance runs well below the outer one to keep the reflection
// coefficients accurate through that cancellation.
double inner_rel(const QuadratureConfig& q) { return q.rel_tol * 1e-3; }

struct Common {
  double alpha, vf, kT, mu_hat, c_log, lnwp;
};

Common common_parts(const GrapheneSheet& sheet, const Geometry& g) {
  Common c;
  c.alpha = constants().fine_structure;
  c.vf = sheet.fermi_ratio;
  c.kT = constants().boltzmann * g.temperature_T;
  c.mu_hat = sheet.chem_potential_mu / c.kT;
  c.c_log = 16.0 * c.alpha * g.separation_a * c.kT /
            (c.vf * c.vf * constants().hbar_c);
  c.lnwp = internal::log_weight_product(sheet, c.kT);
  return c;
}

}  // namespace

TensorPoint tensor_point(double zeta_l, double y, const GrapheneSheet& sheet,
                         const Geometry& g) {
  if (!(zeta_l >= 0.0)) throw std::domain_error("zeta_l must be >= 0");
  if (!(y > 0.0)) throw std::domain_error("y must be positive");
  if (y < zeta_l) throw std::domain_error("y must be >= zeta_l");
  TensorPoint pt;
  pt.zeta_l = zeta_l;
  pt.y = y;
  const double vf = sheet.fermi_ratio;
  pt.p_l = std::sqrt(vf * vf * y * y + (1.0 - vf * vf) * zeta_l * zeta_l);
  pt.d_l = 2.0 * g.separation_a * sheet.gap_delta /
           (constants().hbar_c * pt.p_l);
  pt.b_l = constants().hbar_c * pt.p_l /
           (4.0 * g.separation_a * constants().boltzmann * g.temperature_T);
  return pt;
}

double psi(double x) {
  if (x < 0.0) throw std::domain_error("psi needs x >= 0");
  if (x == 0.0) return std::numbers::pi;
  if (x > 50.0) {
    // x + (1 - x^2) atan(1/x) cancels catastrophically for large x; the
    // series in t = 1/x keeps full precision.
    const double t = 1.0 / x;
    const double t2 = t * t;
    double sum = 0.0, sign = 1.0, tp = t;
    for (int k = 0; k <= 4; ++k) {
      const double coef = (4.0 * k + 4.0) / ((2.0 * k + 1.0) * (2.0 * k + 3.0));
      sum += sign * coef * tp;
      sign = -sign;
      tp *= t2;
    }
    return 2.0 * sum;
  }
  return 2.0 * (x + (1.0 - x * x) * std::atan(1.0 / x));
}

double fermi_weight(double u, double b_l, double mu_over_kT) {
  return fermi(b_l * u - mu_over_kT) + fermi(b_l * u + mu_over_kT);
}

double pi00(const TensorPoint& pt, const GrapheneSheet& sheet,
            const Geometry& g, const QuadratureConfig& q) {
  if (!(pt.zeta_l > 0.0))
    throw std::domain_error("pi00 needs zeta_l > 0; use pi00_zero");
  q.validate();
  const Common c = common_parts(sheet, g);
  const double zeta = pt.zeta_l, y = pt.y, p = pt.p_l, D = pt.d_l, B = pt.b_l;
  const double y2z2 = (y - zeta) * (y + zeta);
  const double m2 = c.vf * c.vf * y2z2 * D * D;
  const double ustar = std::sqrt(1.0 + m2 / (p * p));
  const double ucut = upper_cut(D, ustar, B, c.mu_hat);
  const double coef = 4.0 * c.alpha * p / (c.vf * c.vf);

  auto f = [&](double u) {
    const double w = fermi_weight(u, B, c.mu_hat);
    const std::complex<double> num(p * (1.0 - u * u), 2.0 * zeta * u);
    const std::complex<double> z(p * p * (1.0 - u * u) + m2, 2.0 * zeta * p * u);
    return w * std::real(num / std::sqrt(z));
  };
  const UResult I =
      branch_split_integral(f, D, ustar, ucut, inner_rel(q), q.max_panels);

  return c.alpha * y2z2 / p * psi(D) + c.c_log * c.lnwp - coef * I.value;
}

double pi_combo(const TensorPoint& pt, const GrapheneSheet& sheet,
                const Geometry& g, const QuadratureConfig& q) {
  if (pt.zeta_l == 0.0) return 0.0;
  q.validate();
  const Common c = common_parts(sheet, g);
  const double zeta = pt.zeta_l, y = pt.y, p = pt.p_l, D = pt.d_l, B = pt.b_l;
  const double y2z2 = (y - zeta) * (y + zeta);
  const double m2 = c.vf * c.vf * y2z2 * D * D;
  const double ustar = std::sqrt(1.0 + m2 / (p * p));
  const double ucut = upper_cut(D, ustar, B, c.mu_hat);
  const double coef = 4.0 * c.alpha * p * p / (c.vf * c.vf);

  auto f = [&](double u) {
    const double w = fermi_weight(u, B, c.mu_hat);
    const std::complex<double> num(zeta * zeta - p * p * u * u + m2,
                                   2.0 * zeta * p * u);
    const std::complex<double> z(p * p * (1.0 - u * u) + m2, 2.0 * zeta * p * u);
    return w * std::real(num / std::sqrt(z));
  };
  const UResult I =
      branch_split_integral(f, D, ustar, ucut, inner_rel(q), q.max_panels);

  return c.alpha * y2z2 * p * psi(D) - c.c_log * zeta * zeta * c.lnwp +
         coef * I.value;
}

double pi00_zero(double y, const GrapheneSheet& sheet, const Geometry& g,
                 const QuadratureConfig& q) {
  if (!(y > 0.0)) throw std::domain_error("y must be positive");
  q.validate();
  const Common c = common_parts(sheet, g);
  const double d0 = 2.0 * g.separation_a * sheet.gap_delta /
                    (constants().hbar_c * c.vf * y);
  const double b0 = constants().hbar_c * c.vf * y /
                    (4.0 * g.separation_a * c.kT);
  const double r2 = 1.0 + d0 * d0;
  const double r = std::sqrt(r2);
  const double phi_m = std::atan2(1.0, d0);
  // u = r cos(phi) turns the integrable endpoint singularity at u = r into a
  // smooth integrand on [0, phi_m]
  auto f = [&](double phi) {
    const double s = std::sin(phi);
    return fermi_weight(r * std::cos(phi), b0, c.mu_hat) *
           (r2 * s * s - d0 * d0);
  };
  const QuadResult I =
      integrate(f, 0.0, phi_m, inner_rel(q), 0.0, q.max_panels);
  return c.alpha * y * psi(d0) / c.vf + c.c_log * c.lnwp -
         4.0 * c.alpha * y / c.vf * I.value;
}

DielectricPair dielectric_functions(const TensorPoint& pt,
                                    const GrapheneSheet& sheet,
                                    const Geometry& g,
                                    const QuadratureConfig& q) {
  if (pt.zeta_l == 0.0)
    throw std::domain_error(
        "transverse dielectric function undefined at zero frequency");
  if (!(pt.y > pt.zeta_l))
    throw std::domain_error("dielectric functions need y > zeta_l");
  const double k = std::sqrt((pt.y - pt.zeta_l) * (pt.y + pt.zeta_l));
  DielectricPair out;
  out.eps_longitudinal = 1.0 + pi00(pt, sheet, g, q) / (2.0 * k);
  out.eps_transverse =
      1.0 + pi_combo(pt, sheet, g, q) / (2.0 * pt.zeta_l * pt.zeta_l * k);
  return out;
}

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw std::invalid_argument("rel_tol must lie in (0, 1)");
  if (!(abs_tol >= 0.0)) throw std::invalid_argument("abs_tol must be >= 0");
  if (max_panels < 10) throw std::invalid_argument("max_panels must be >= 10");
  if (!(matsubara_rel_tail > 0.0 && matsubara_rel_tail < 1.0))
    throw std::invalid_argument("matsubara_rel_tail must lie in (0, 1)");
  if (matsubara_max_l < 1)
    throw std::invalid_argument("matsubara_max_l must be >= 1");
  if (consecutive_small < 1)
    throw std::invalid_argument("consecutive_small must be >= 1");
}

}

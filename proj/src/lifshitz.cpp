#include "graphene_cp/lifshitz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gcp {

namespace {

struct TermResult {
  double value;
  double err;
};

// Even a perfect mirror contributes at most 2 e^{-Y}(Y^3 + 3Y^2 + 6Y + 6)
// past y = Y, so a 60-wide window leaves a remainder near 1e-22. Kept with a
// 1.5x margin in the error bound.
double window_tail(double hi) {
  return 3.0 * std::exp(-hi) *
         (hi * (hi * (hi + 3.0) + 6.0) + 6.0);
}

TermResult term_impl(double zeta, const ReflectionFn& refl,
                     const QuadratureConfig& q, double abs_tol) {
  const double hi = zeta + 60.0;
  const double z2 = zeta * zeta;
  auto f = [&](double y) {
    const ReflectionPair r = refl(zeta, y);
    return y * std::exp(-y) *
           ((2.0 * y * y - z2) * r.r_tm - z2 * r.r_te);
  };
  const QuadResult res = integrate(f, zeta, hi, q.rel_tol, abs_tol,
                                   q.max_panels);
  return {res.value, res.abs_err + window_tail(hi)};
}

ReflectionFn graphene_reflection(const GrapheneSheet& sheet, const Geometry& g,
                                 const QuadratureConfig& q) {
  return [sheet, g, q](double zeta, double y) {
    return reflection_at(tensor_point(zeta, y, sheet, g), sheet, g, q);
  };
}

// Mirror envelope for everything the sum truncation leaves behind.
double ideal_matsubara_tail(int last_l, const Geometry& g) {
  double acc = 0.0;
  for (int l = last_l + 1; l <= last_l + 4000; ++l) {
    const double z = matsubara_zeta(l, g);
    const double t = 2.0 * std::exp(-z) * (z * (z * (z + 3.0) + 6.0) + 6.0);
    acc += t;
    if (t < 1e-3 * acc || t < 1e-300) break;
  }
  return acc;
}

struct SumResult {
  double sum;
  double err;
  int terms;
};

SumResult matsubara_sum(const ReflectionFn& refl, const Geometry& g,
                        const std::optional<PolarizabilityModel>& pol,
                        const QuadratureConfig& q) {
  const double alpha0 = pol ? pol->alpha0() : 1.0;
  if (pol && !(alpha0 > 0.0))
    throw std::invalid_argument("polarizability at zero frequency must be positive");
  const double hwc = characteristic_energy(g);

  const TermResult t0 = term_impl(0.0, refl, q, 0.0);
  double sum = 0.5 * t0.value;
  double err = 0.5 * t0.err;
  int small_run = 0;
  int last_l = 0;
  for (int l = 1; l <= q.matsubara_max_l; ++l) {
    const double zeta = matsubara_zeta(l, g);
    const double wl = pol ? pol->eval(zeta * hwc) / alpha0 : 1.0;
    const double abs_hint =
        q.matsubara_rel_tail * std::fabs(sum) * 0.1 / std::max(1.0, wl);
    const TermResult tl = term_impl(zeta, refl, q, abs_hint);
    const double contrib = wl * tl.value;
    sum += contrib;
    err += std::fabs(wl) * tl.err;
    last_l = l;
    if (std::fabs(contrib) < q.matsubara_rel_tail * std::fabs(sum)) {
      if (++small_run >= q.consecutive_small) break;
    } else {
      small_run = 0;
    }
    if (l == q.matsubara_max_l)
      throw QuadratureError(
          "matsubara sum still above tail threshold at l = " +
              std::to_string(q.matsubara_max_l),
          sum, err + std::fabs(contrib) + ideal_matsubara_tail(l, g));
  }
  err += ideal_matsubara_tail(last_l, g);
  return {sum, err, last_l + 1};
}

ForceResult pack_result(double sum, double err, int terms, const Geometry& g,
                        const std::optional<PolarizabilityModel>& pol) {
  ForceResult out;
  out.reduced_force = sum;
  out.terms_used = terms;
  out.est_rel_error = (sum != 0.0) ? err / std::fabs(sum) : 0.0;
  if (pol) {
    const double kT = constants().boltzmann * g.temperature_T;
    const double a = g.separation_a;
    out.absolute_force =
        -kT * pol->alpha0() * sum / (8.0 * a * a * a * a);
  }
  return out;
}

}  // namespace

PolarizabilityModel PolarizabilityModel::static_model(double alpha0_um3) {
  if (!(alpha0_um3 > 0.0))
    throw std::invalid_argument("alpha0 must be positive");
  PolarizabilityModel m;
  m.eval = [alpha0_um3](double) { return alpha0_um3; };
  return m;
}

double term_l_with(double zeta_l, const ReflectionFn& refl,
                   const QuadratureConfig& q, double abs_tol) {
  if (!(zeta_l >= 0.0)) throw std::domain_error("zeta_l must be >= 0");
  q.validate();
  return term_impl(zeta_l, refl, q, abs_tol).value;
}

double term_l(int l, const GrapheneSheet& sheet, const Geometry& g,
              const QuadratureConfig& q) {
  return term_l_with(matsubara_zeta(l, g), graphene_reflection(sheet, g, q),
                     q);
}

ForceResult force_total_with(const ReflectionFn& refl, const Geometry& g,
                             const std::optional<PolarizabilityModel>& pol,
                             const QuadratureConfig& q) {
  q.validate();
  const SumResult s = matsubara_sum(refl, g, pol, q);
  return pack_result(s.sum, s.err, s.terms, g, pol);
}

ForceResult force_total(const GrapheneSheet& sheet, const Geometry& g,
                        const std::optional<PolarizabilityModel>& pol,
                        const QuadratureConfig& q) {
  return force_total_with(graphene_reflection(sheet, g, q), g, pol, q);
}

ForceResult force_zero_term_with(const ReflectionFn& refl, const Geometry& g,
                                 const std::optional<PolarizabilityModel>& pol,
                                 const QuadratureConfig& q) {
  q.validate();
  if (pol && !(pol->alpha0() > 0.0))
    throw std::invalid_argument("polarizability at zero frequency must be positive");
  const TermResult t0 = term_impl(0.0, refl, q, 0.0);
  return pack_result(0.5 * t0.value, 0.5 * t0.err, 1, g, pol);
}

ForceResult force_zero_term(const GrapheneSheet& sheet, const Geometry& g,
                            const std::optional<PolarizabilityModel>& pol,
                            const QuadratureConfig& q) {
  return force_zero_term_with(graphene_reflection(sheet, g, q), g, pol, q);
}

double force_ideal_metal(const Geometry& g, const PolarizabilityModel& pol) {
  const double kT = constants().boltzmann * g.temperature_T;
  const double a = g.separation_a;
  return -3.0 * kT * pol.alpha0() / (4.0 * a * a * a * a);
}

double delta_f0(const GrapheneSheet& sheet, const Geometry& g,
                const QuadratureConfig& q) {
  return force_zero_term(sheet, g, std::nullopt, q).reduced_force / 6.0 - 1.0;
}

}

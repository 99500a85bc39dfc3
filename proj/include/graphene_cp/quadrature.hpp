#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcp {

struct QuadratureConfig {
  double rel_tol = 1e-9;          // on the outer (frequency) integrals
  double abs_tol = 0.0;
  int max_panels = 2000;          // per adaptive integral
  double matsubara_rel_tail = 1e-10;
  int matsubara_max_l = 5000;
  int consecutive_small = 3;      // terms below tail threshold before stopping

  void validate() const;          // throws std::invalid_argument
};

class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& what, double best, double bound)
      : std::runtime_error(what), best_estimate(best), error_bound(bound) {}
  double best_estimate;
  double error_bound;
};

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;   // rigorous-style bound from the embedded rule
  int panels = 0;
};

namespace detail {

// Gauss-Kronrod 15(7) on [-1,1]; abscissae are symmetric, only the
// nonnegative half is stored. Gauss points are the odd-index entries.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double err;
  bool splittable;
};

template <class F>
Panel eval_panel(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  double resk = 0.0, resg = 0.0, resabs = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = (j == 7) ? f1 : f(c + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    const double s = (j == 7) ? f1 : f1 + f2;
    resk += kWgk[j] * s;
    resabs += kWgk[j] * ((j == 7) ? std::fabs(f1)
                                  : std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double mean = 0.5 * resk;
  double resasc = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double d1 = std::fabs(fv[j] - mean);
    const double d2 = std::fabs(fv[14 - j] - mean);
    resasc += kWgk[j] * ((j == 7) ? d1 : d1 + d2);
  }
  resk *= h;
  resg *= h;
  resabs *= std::fabs(h);
  resasc *= std::fabs(h);
  double err = std::fabs(resk - resg);
  if (resasc != 0.0 && err != 0.0) {
    const double r = std::pow(200.0 * err / resasc, 1.5);
    err = resasc * std::min(1.0, r);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * resabs);
  if (!std::isfinite(resk) || !std::isfinite(err))
    throw QuadratureError("non-finite integrand value in [" +
                              std::to_string(a) + ", " + std::to_string(b) + "]",
                          resk, std::numeric_limits<double>::infinity());
  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk;
  p.err = err;
  const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  p.splittable = (b - a) > 64.0 * eps * scale;
  return p;
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [a, b]. Worst panel first, totals resummed every
// pass so the result does not depend on accumulation order. Throws
// QuadratureError (carrying the best estimate and its bound) when the panel
// budget is exhausted or no splittable panel remains above tolerance.
template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol,
                     double abs_tol = 0.0, int max_panels = 2000) {
  QuadResult out;
  if (a == b) return out;
  std::vector<detail::Panel> heap;
  heap.push_back(detail::eval_panel(f, a, b));
  int panels = 1;
  double retired_val = 0.0, retired_err = 0.0;
  auto worse = [](const detail::Panel& x, const detail::Panel& y) {
    return x.err < y.err;
  };
  for (;;) {
    double total = retired_val, err = retired_err;
    for (const auto& p : heap) {
      total += p.value;
      err += p.err;
    }
    const double bound = std::max(abs_tol, rel_tol * std::fabs(total));
    if (err <= bound || heap.empty()) {
      out.value = total;
      out.abs_err = err;
      out.panels = panels;
      return out;
    }
    if (panels >= max_panels)
      throw QuadratureError("quadrature did not converge in " +
                                std::to_string(max_panels) + " panels",
                            total, err);
    std::pop_heap(heap.begin(), heap.end(), worse);
    detail::Panel worst = heap.back();
    heap.pop_back();
    if (!worst.splittable) {
      // refinement exhausted at machine width; its error is irreducible
      retired_val += worst.value;
      retired_err += worst.err;
      if (heap.empty() && retired_err > std::max(abs_tol, rel_tol * std::fabs(retired_val)))
        throw QuadratureError("quadrature stalled at machine-width panels",
                              retired_val, retired_err);
      continue;
    }
    const double m = 0.5 * (worst.a + worst.b);
    heap.push_back(detail::eval_panel(f, worst.a, m));
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(detail::eval_panel(f, m, worst.b));
    std::push_heap(heap.begin(), heap.end(), worse);
    ++panels;
  }
}

}

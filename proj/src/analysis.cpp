#include "graphene_cp/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <limits>

#include "graphene_cp/version.hpp"

namespace gcp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int thread_cap() {
  const char* env = std::getenv("GRAPHENE_CP_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return std::clamp(n, 1, 64);
}

// job(i) for i in [0, n), results stored by index. Scheduling never touches
// the merge order, so threaded runs stay byte-identical to serial ones.
template <class Fn>
auto indexed_map(int n, Fn&& job) {
  using R = decltype(job(0));
  std::vector<R> out(static_cast<size_t>(n));
  const int k = std::min(thread_cap(), n);
  if (k <= 1) {
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = job(i);
    return out;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next++; i < n; i = next++) out[static_cast<size_t>(i)] = job(i);
  };
  std::vector<std::future<void>> futures;
  futures.reserve(static_cast<size_t>(k));
  for (int t = 0; t < k; ++t)
    futures.push_back(std::async(std::launch::async, worker));
  for (auto& f : futures) f.get();
  return out;
}

std::string label(double gap_ev, double mu_ev) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "gap=%geV mu=%geV", gap_ev, mu_ev);
  return buf;
}

std::string mu_label(double mu_ev) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "mu=%geV", mu_ev);
  return buf;
}

void validate_grid(const ScanSpec& spec) {
  if (spec.gaps_ev.empty() || spec.mus_ev.empty())
    throw std::invalid_argument("scan needs at least one gap and one mu");
  for (double gap : spec.gaps_ev)
    if (!(gap >= 0.0)) throw std::invalid_argument("gaps must be >= 0");
  for (size_t i = 1; i < spec.gaps_ev.size(); ++i)
    if (!(spec.gaps_ev[i] > spec.gaps_ev[i - 1]))
      throw std::invalid_argument("gaps must be strictly increasing");
  for (double mu : spec.mus_ev)
    if (!(mu >= 0.0)) throw std::invalid_argument("mus must be >= 0");
  if (!(spec.temp_k > 0.0))
    throw std::invalid_argument("temperature must be positive");
  if (!(spec.tol_um > 0.0))
    throw std::invalid_argument("tol_um must be positive");
}

void validate_range(const ScanSpec& spec) {
  if (!(spec.a_min_um > 0.0) || !(spec.a_max_um > spec.a_min_um))
    throw std::invalid_argument("need 0 < a_min < a_max");
  if (spec.points < 2) throw std::invalid_argument("need at least 2 points");
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out(static_cast<size_t>(n));
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] =
        lo * std::exp(ratio * i / static_cast<double>(n - 1));
  out.back() = hi;
  return out;
}

A0Result bisect_a0(const std::function<double(double)>& ratio,
                   double threshold, double a_lo, double a_hi, double tol_um) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw std::invalid_argument("threshold must lie in (0, 1)");
  if (!(a_lo > 0.0 && a_hi > a_lo))
    throw std::invalid_argument("need 0 < a_lo < a_hi");
  if (!(tol_um > 0.0)) throw std::invalid_argument("tol_um must be positive");
  const double r_lo = ratio(a_lo);
  if (r_lo >= threshold) return {a_lo, r_lo};
  double r_hi = ratio(a_hi);
  while (r_hi < threshold && a_hi < 100.0) {
    a_hi = std::min(a_hi * 1.5, 100.0);
    r_hi = ratio(a_hi);
  }
  if (r_hi < threshold)
    throw BracketError(
        "zero-frequency share stays below the threshold up to 100 um");
  double lo = a_lo, hi = a_hi;
  while (hi - lo > tol_um) {
    const double mid = 0.5 * (lo + hi);
    const double rm = ratio(mid);
    if (rm >= threshold) {
      hi = mid;
      r_hi = rm;
    } else {
      lo = mid;
    }
  }
  return {hi, r_hi};
}

// First sampled point after which |deviation| stays inside the band, sharpened
// by bisection between the last failing sample and its successor.
Crossing locate_crossing(const std::string& name,
                         const std::vector<double>& a_grid,
                         const std::vector<double>& deviation,
                         const std::function<double(double)>& dev_at,
                         double band, double tol_um) {
  Crossing out{name, kNaN, false, false};
  int last_fail = -1;
  for (size_t i = 0; i < a_grid.size(); ++i)
    if (!(std::fabs(deviation[i]) <= band)) last_fail = static_cast<int>(i);
  if (last_fail < 0) {
    out.always_within = true;
    return out;
  }
  if (last_fail + 1 == static_cast<int>(a_grid.size())) {
    out.never_within = true;
    return out;
  }
  double lo = a_grid[static_cast<size_t>(last_fail)];
  double hi = a_grid[static_cast<size_t>(last_fail) + 1];
  while (hi - lo > tol_um) {
    const double mid = 0.5 * (lo + hi);
    if (std::fabs(dev_at(mid)) <= band)
      hi = mid;
    else
      lo = mid;
  }
  out.a_um = hi;
  return out;
}

CurveMeta meta_for(const ScanSpec& spec, const QuadratureConfig& q) {
  CurveMeta m;
  m.temp_k = spec.temp_k;
  m.rel_tol = q.rel_tol;
  m.version = kVersion;
  return m;
}

}  // namespace

ScanSpec ScanSpec::defaults() {
  ScanSpec s;
  for (int k = 0; k < 20; ++k) s.gaps_ev.push_back(0.001 + 0.01 * k);
  s.gaps_ev.push_back(0.2);
  s.mus_ev = {0.0, 0.025, 0.075, 0.15};
  return s;
}

A0Result find_a0(const GrapheneSheet& sheet, double temp_k, double threshold,
                 double a_lo_um, double a_hi_um, double tol_um,
                 const QuadratureConfig& q) {
  auto ratio = [&](double a) {
    const Geometry g(a, temp_k);
    return force_zero_term(sheet, g, std::nullopt, q).reduced_force /
           force_total(sheet, g, std::nullopt, q).reduced_force;
  };
  return bisect_a0(ratio, threshold, a_lo_um, a_hi_um, tol_um);
}

A0Result find_a0_with(const ReflectionFn& refl, double temp_k,
                      double threshold, double a_lo_um, double a_hi_um,
                      double tol_um, const QuadratureConfig& q) {
  auto ratio = [&](double a) {
    const Geometry g(a, temp_k);
    return force_zero_term_with(refl, g, std::nullopt, q).reduced_force /
           force_total_with(refl, g, std::nullopt, q).reduced_force;
  };
  return bisect_a0(ratio, threshold, a_lo_um, a_hi_um, tol_um);
}

CurveTable scan_a0_vs_gap(const ScanSpec& spec, const QuadratureConfig& q) {
  validate_grid(spec);
  q.validate();
  const int n_gap = static_cast<int>(spec.gaps_ev.size());
  const int n_mu = static_cast<int>(spec.mus_ev.size());
  auto values = indexed_map(n_gap * n_mu, [&](int idx) {
    const double gap = spec.gaps_ev[static_cast<size_t>(idx % n_gap)];
    const double mu = spec.mus_ev[static_cast<size_t>(idx / n_gap)];
    const GrapheneSheet sheet(gap, mu, spec.vf_ratio);
    try {
      return find_a0(sheet, spec.temp_k, spec.threshold, 1.0, 7.6,
                     spec.tol_um, q)
          .a0_um;
    } catch (const BracketError&) {
      return kNaN;
    }
  });
  CurveTable t;
  t.abscissa_name = "gap_ev";
  t.abscissa = spec.gaps_ev;
  t.meta = meta_for(spec, q);
  for (int m = 0; m < n_mu; ++m) {
    t.curve_names.push_back("a0_um[" + mu_label(spec.mus_ev[static_cast<size_t>(m)]) + "]");
    t.curves.emplace_back(values.begin() + static_cast<long>(m) * n_gap,
                          values.begin() + static_cast<long>(m + 1) * n_gap);
  }
  return t;
}

DeltaF0Scan scan_delta_f0(const ScanSpec& spec, const QuadratureConfig& q) {
  validate_grid(spec);
  validate_range(spec);
  q.validate();
  if (!(spec.a_min_um >= 3.0))
    throw std::invalid_argument(
        "zero-term deviation scan is defined for separations >= 3 um");
  const auto a_grid = log_spaced(spec.a_min_um, spec.a_max_um, spec.points);
  const int n_gap = static_cast<int>(spec.gaps_ev.size());
  const int n_mu = static_cast<int>(spec.mus_ev.size());

  auto curves = indexed_map(n_gap * n_mu, [&](int idx) {
    const double gap = spec.gaps_ev[static_cast<size_t>(idx % n_gap)];
    const double mu = spec.mus_ev[static_cast<size_t>(idx / n_gap)];
    const GrapheneSheet sheet(gap, mu, spec.vf_ratio);
    std::vector<double> vals;
    vals.reserve(a_grid.size());
    for (double a : a_grid)
      vals.push_back(delta_f0(sheet, Geometry(a, spec.temp_k), q));
    return vals;
  });

  DeltaF0Scan out;
  out.table.abscissa_name = "separation_um";
  out.table.abscissa = a_grid;
  out.table.meta = meta_for(spec, q);
  for (int idx = 0; idx < n_gap * n_mu; ++idx) {
    const double gap = spec.gaps_ev[static_cast<size_t>(idx % n_gap)];
    const double mu = spec.mus_ev[static_cast<size_t>(idx / n_gap)];
    const std::string name =
        "delta_f0[" + label(gap, mu) + "]";
    out.table.curve_names.push_back(name);
    out.table.curves.push_back(curves[static_cast<size_t>(idx)]);
    const GrapheneSheet sheet(gap, mu, spec.vf_ratio);
    auto dev_at = [&sheet, &spec, &q](double a) {
      return delta_f0(sheet, Geometry(a, spec.temp_k), q);
    };
    out.crossings.push_back(locate_crossing(
        name, a_grid, curves[static_cast<size_t>(idx)], dev_at, 0.01,
        spec.tol_um));
  }
  return out;
}

RatioScan scan_exact_vs_asymptotic(const ScanSpec& spec,
                                   const QuadratureConfig& q) {
  validate_grid(spec);
  validate_range(spec);
  q.validate();
  const auto a_grid = log_spaced(spec.a_min_um, spec.a_max_um, spec.points);
  const int n_gap = static_cast<int>(spec.gaps_ev.size());
  const int n_mu = static_cast<int>(spec.mus_ev.size());

  auto ratio_at = [&](const GrapheneSheet& sheet, double a) {
    const Geometry g(a, spec.temp_k);
    return force_zero_term(sheet, g, std::nullopt, q).reduced_force /
           force_asymptotic(sheet, g, std::nullopt).reduced_force;
  };

  auto curves = indexed_map(n_gap * n_mu, [&](int idx) {
    const double gap = spec.gaps_ev[static_cast<size_t>(idx % n_gap)];
    const double mu = spec.mus_ev[static_cast<size_t>(idx / n_gap)];
    const GrapheneSheet sheet(gap, mu, spec.vf_ratio);
    std::vector<double> vals;
    vals.reserve(a_grid.size());
    for (double a : a_grid) vals.push_back(ratio_at(sheet, a));
    return vals;
  });

  RatioScan out;
  out.table.abscissa_name = "separation_um";
  out.table.abscissa = a_grid;
  out.table.meta = meta_for(spec, q);
  for (int idx = 0; idx < n_gap * n_mu; ++idx) {
    const double gap = spec.gaps_ev[static_cast<size_t>(idx % n_gap)];
    const double mu = spec.mus_ev[static_cast<size_t>(idx / n_gap)];
    const GrapheneSheet sheet(gap, mu, spec.vf_ratio);
    const std::string name = "f0_over_asym[" + label(gap, mu) + "]";
    out.table.curve_names.push_back(name);
    out.table.curves.push_back(curves[static_cast<size_t>(idx)]);
    std::vector<double> dev(a_grid.size());
    for (size_t i = 0; i < a_grid.size(); ++i)
      dev[i] = curves[static_cast<size_t>(idx)][i] - 1.0;
    auto dev_at = [&sheet, ratio_at](double a) {
      return ratio_at(sheet, a) - 1.0;
    };
    out.crossings_1pct.push_back(
        locate_crossing(name, a_grid, dev, dev_at, 0.01, spec.tol_um));
    out.crossings_2pct.push_back(
        locate_crossing(name, a_grid, dev, dev_at, 0.02, spec.tol_um));
  }
  return out;
}

}

#pragma once

#include <string>
#include <vector>

#include "graphene_cp/asymptotics.hpp"

namespace gcp {

struct ScanSpec {
  std::vector<double> gaps_ev;
  std::vector<double> mus_ev;
  double a_min_um = 3.0;
  double a_max_um = 100.0;
  int points = 40;          // log-spaced separations
  double temp_k = 300.0;
  double vf_ratio = 1.0 / 300.0;
  double threshold = 0.99;  // zero-term dominance target for a0
  double tol_um = 0.01;

  static ScanSpec defaults();
};

struct CurveMeta {
  double temp_k = 300.0;
  double rel_tol = 1e-9;
  std::string version;
};

// Shared result shape for every scan: one abscissa, one or more named curves.
// NaN entries mark points a curve could not produce (e.g. bracket failures).
struct CurveTable {
  std::string abscissa_name;
  std::vector<double> abscissa;  // strictly increasing
  std::vector<std::string> curve_names;
  std::vector<std::vector<double>> curves;  // curves[c].size() == abscissa.size()
  CurveMeta meta;
};

// Where |quantity| first stays within a band for all larger sampled
// separations. a_um is NaN when the flags tell the story instead.
struct Crossing {
  std::string curve;
  double a_um;
  bool always_within;  // inside the band on the whole sampled range
  bool never_within;   // outside the band even at a_max
};

struct A0Result {
  double a0_um;
  double ratio_at_a0;
};

class BracketError : public std::runtime_error {
public:
  explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// Smallest separation at which the zero-frequency term carries `threshold`
// of the total force. Bisects on [a_lo, a_hi]; the upper end auto-expands to
// 100 um before giving up with BracketError.
A0Result find_a0(const GrapheneSheet& sheet, double temp_k,
                 double threshold = 0.99, double a_lo_um = 1.0,
                 double a_hi_um = 7.6, double tol_um = 0.01,
                 const QuadratureConfig& q = {});
A0Result find_a0_with(const ReflectionFn& refl, double temp_k,
                      double threshold = 0.99, double a_lo_um = 1.0,
                      double a_hi_um = 7.6, double tol_um = 0.01,
                      const QuadratureConfig& q = {});

// a0 as a function of the gap, one curve per chemical potential.
CurveTable scan_a0_vs_gap(const ScanSpec& spec, const QuadratureConfig& q = {});

struct DeltaF0Scan {
  CurveTable table;                 // delta_f0 per (gap, mu) combination
  std::vector<Crossing> crossings;  // |delta_f0| <= 1% band
};
DeltaF0Scan scan_delta_f0(const ScanSpec& spec, const QuadratureConfig& q = {});

struct RatioScan {
  CurveTable table;  // F0 / F0_asymptotic per (gap, mu) combination
  std::vector<Crossing> crossings_1pct;
  std::vector<Crossing> crossings_2pct;
};
RatioScan scan_exact_vs_asymptotic(const ScanSpec& spec,
                                   const QuadratureConfig& q = {});

}

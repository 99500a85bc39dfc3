#include "doctest.h"
#include "graphene_cp/reflection.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace gcp;

namespace {
const QuadratureConfig kQuad;
}

TEST_SUITE("reflection") {

TEST_CASE("zero-frequency TM coefficient composes from the tensor") {
  const GrapheneSheet sheet(0.2, 0.025);
  const Geometry g(5.0, 300.0);
  for (double y : {0.3, 1.0, 2.7}) {
    const double p00 = pi00_zero(y, sheet, g, kQuad);
    const double direct = p00 / (p00 + 2.0 * y);
    CHECK(r_tm_zero(y, sheet, g, kQuad) ==
          doctest::Approx(direct).epsilon(1e-14));
    // the two algebraic forms agree to rounding
    CHECK(r_tm_zero(y, sheet, g, kQuad) ==
          doctest::Approx(r_tm_zero_variant(y, sheet, g, kQuad))
              .epsilon(1e-14));
    CHECK(r_tm_zero(y, sheet, g, kQuad) > 0.0);
    CHECK(r_tm_zero(y, sheet, g, kQuad) < 1.0);
  }
}

TEST_CASE("reflection pair against brute force at a sample point") {
  const GrapheneSheet sheet(0.1, 0.075);
  const Geometry g(1.0, 300.0);
  const oracle::Params P{1.0, 300.0, 0.1, 0.075};
  const double zeta = matsubara_zeta(1, g);
  const TensorPoint pt = tensor_point(zeta, 2.0, sheet, g);
  const ReflectionPair mine = reflection_at(pt, sheet, g, kQuad);
  const oracle::Reflection ref = oracle::reflection(zeta, 2.0, P, 1e-12);
  CHECK(mine.r_tm == doctest::Approx(ref.r_tm).epsilon(1e-9));
  CHECK(mine.r_te == doctest::Approx(ref.r_te).epsilon(1e-9));
}

TEST_CASE("ranges: TM in [0,1], TE in [-1,0]") {
  for (double a : {1.0, 4.0})
    for (double gap : {0.0, 0.2})
      for (double mu : {0.0, 0.15}) {
        const GrapheneSheet sheet(gap, mu);
        const Geometry g(a, 300.0);
        for (int l : {0, 1, 3}) {
          const double zeta = matsubara_zeta(l, g);
          for (double fac : {1.01, 2.0, 5.0}) {
            const double y = (l == 0) ? fac - 0.5 : fac * zeta;
            if (y <= zeta) continue;
            const ReflectionPair r =
                reflection_at(tensor_point(zeta, y, sheet, g), sheet, g, kQuad);
            CHECK(r.r_tm >= 0.0);
            CHECK(r.r_tm <= 1.0);
            CHECK(r.r_te <= 0.0);
            CHECK(r.r_te >= -1.0);
            if (l == 0) CHECK(r.r_te == 0.0);
          }
        }
      }
}

TEST_CASE("light-cone edge is deterministic") {
  const GrapheneSheet sheet(0.1, 0.05);
  const Geometry g(2.0, 300.0);
  const double zeta = matsubara_zeta(1, g);
  // both tensor entries cancel exactly on the edge: the psi terms carry the
  // vanishing momentum prefactor and the u integral collapses onto the
  // logarithmic term
  const TensorPoint edge = tensor_point(zeta, zeta, sheet, g);
  const double p00 = pi00(edge, sheet, g, kQuad);
  const double pc = pi_combo(edge, sheet, g, kQuad);
  CHECK(std::fabs(p00) < 1e-6);
  CHECK(std::fabs(pc) < 1e-4);
  const ReflectionPair r = reflection_at(edge, sheet, g, kQuad);
  CHECK(r.r_tm == 0.0);
  CHECK(r.r_te == 0.0);
}

TEST_CASE("doping strengthens the zero-frequency TM reflection") {
  const GrapheneSheet base(0.2, 0.0);
  const Geometry g(3.0, 300.0);
  double prev = r_tm_zero(1.0, base, g, kQuad);
  for (double mu : {0.025, 0.075, 0.15}) {
    const double v = r_tm_zero(1.0, GrapheneSheet(0.2, mu), g, kQuad);
    CHECK(v > prev);
    prev = v;
  }
  // strong doping drives the sheet toward an ideal mirror
  CHECK(r_tm_zero(1.0, GrapheneSheet(0.2, 2.0), g, kQuad) > 0.999);
}

}

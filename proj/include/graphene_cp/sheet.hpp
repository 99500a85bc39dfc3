#pragma once

namespace gcp {

// Material state of the sheet. gap_delta is the full mass gap Delta (the
// quasiparticle spectrum is +-sqrt(vF^2 p^2 + Delta^2/4)), chem_potential_mu
// the chemical potential, both eV and nonnegative. fermi_ratio = v_F/c.
struct GrapheneSheet {
  double gap_delta;
  double chem_potential_mu;
  double fermi_ratio;

  GrapheneSheet(double gap_ev, double mu_ev);  // fermi_ratio = 1/300
  GrapheneSheet(double gap_ev, double mu_ev, double vf_ratio);
};

}

#pragma once

#include <array>
#include <vector>

#include "octomax/field_calculus.hpp"
#include "octomax/lattice.hpp"

namespace octomax {

using Vec3Field = std::array<std::vector<double>, 3>;

// Field and source data on one spatial slice. The electric/magnetic split
// comes from the real and e7 parts of the quaternion-pair components:
// Y_j = E_j + e7 H_j, d0 Y0 = -rho_m + e7 rho_e, d_j Y0 = (j_m)_j - e7 (j_e)_j.
struct MaxwellState {
  Lattice3D lattice;
  double dt = 0.0;  // slice spacing when part of a time series
  Vec3Field E, H, j_e, j_m;
  std::vector<double> rho_e, rho_m;

  static MaxwellState zeros(const Lattice3D& lat, double dt = 0.0);
};

// LHS - RHS form of the divergence and curl equations:
//   gauss_e = div E - rho_e          gauss_m = div H - rho_m
//   faraday = curl E + dH/dt + j_m   ampere  = curl H - dE/dt - j_e
struct MaxwellResiduals {
  Lattice3D lattice;
  std::vector<double> gauss_e, gauss_m;
  Vec3Field faraday, ampere;
};

struct DualityAngle {
  double radians = 0.0;
};

// Slices a sampled 4D field along axis 0; sources are discrete derivatives
// of Y0, fields the re/im parts of Y1..Y3.
std::vector<MaxwellState> extract_states(const FieldGrid4D& f);
MaxwellState extract_state(const FieldGrid4D& f, int slice);

// Residuals of one state; the time derivatives of E and H are supplied by
// the caller (adjacent slices or an analytic scenario).
MaxwellResiduals residuals(const MaxwellState& s, const Vec3Field& dE_dt, const Vec3Field& dH_dt);

// Coefficient planes of a derivative field in the order
// e0, e7, e1, e2, e3, e7e1, e7e2, e7e3 (the last three stored as e4..e6).
// With states extracted from the same field the dictionary is
//   e0 = -gauss_e, e7 = -gauss_m, e_j = faraday_j, e7e_j = ampere_j.
struct EightComponentSplit {
  Lattice4D lattice;
  std::vector<double> e0, e7;
  Vec3Field e_j, e7e_j;
};
EightComponentSplit eight_component_split(const OctonionField& dO);

// Pointwise rotation of (rho_e, rho_m), (j_e, j_m) and (E, H) by
// R(theta) = [[cos, -sin], [sin, cos]].
MaxwellState duality_rotate(const MaxwellState& s, DualityAngle theta);

// Charge conservation checks over a time series (>= 3 slices):
//   electric = d0 rho_e + div j_e,  magnetic = d0 rho_m + div j_m,
// central time differences, returned for the interior slices only.
struct ContinuityResiduals {
  Lattice3D lattice;
  int first_slice = 1;             // index of the first interior slice
  std::vector<std::vector<double>> electric, magnetic;  // one field per interior slice
};
ContinuityResiduals continuity_residuals(const std::vector<MaxwellState>& states);

// Wave operator d0^2 - (d1^2 + d2^2 + d3^2) on a complex scalar field.
ComplexField4D dalembertian(const ComplexField4D& Y0);

// Spatial differential operators used by the residuals (exposed for tests
// and the solver diagnostics).
std::vector<double> divergence(const Vec3Field& F, const Lattice3D& lat);
Vec3Field curl(const Vec3Field& F, const Lattice3D& lat);

// Interior norms on a 3D lattice (all sites under periodic boundaries).
InteriorNorms interior_norms3(const std::vector<double>& v, const Lattice3D& lat);

// Norms of the full residual vector: per-site Euclidean magnitude over all
// eight channels, reduced to interior max and L2. Invariant under duality
// rotation because R(theta) is orthogonal.
InteriorNorms residual_vector_norms(const MaxwellResiduals& r);

// Per-channel interior norms in report order:
// gauss_e, gauss_m, faraday, ampere (vector channels use per-site magnitude).
std::array<InteriorNorms, 4> residual_channel_norms(const MaxwellResiduals& r);
extern const std::array<const char*, 4> kResidualChannelNames;

}  // namespace octomax

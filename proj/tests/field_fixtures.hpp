#pragma once

// Analytic field fixtures for the derivative and residual tests, plus a
// test-side evaluator of the rotated derivative written out literally from
// its re/im expansion. Shared by the unit and acceptance suites.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "octomax/field_calculus.hpp"
#include "octomax/octonion.hpp"

namespace fixtures {

// Sum of integer-frequency cosine modes; periodic on [0, 2pi)^4.
struct TrigMode {
  std::array<int, 4> m{};
  double amp = 0.0;
  double phase = 0.0;
};

struct TrigPlane {
  std::vector<TrigMode> modes;

  double value(const std::array<double, 4>& x) const {
    double s = 0.0;
    for (const auto& md : modes)
      s += md.amp * std::cos(md.m[0] * x[0] + md.m[1] * x[1] + md.m[2] * x[2] + md.m[3] * x[3] +
                             md.phase);
    return s;
  }
  double derivative(const std::array<double, 4>& x, int axis) const {
    double s = 0.0;
    for (const auto& md : modes)
      s -= md.amp * md.m[axis] *
           std::sin(md.m[0] * x[0] + md.m[1] * x[1] + md.m[2] * x[2] + md.m[3] * x[3] + md.phase);
    return s;
  }
};

struct TrigField {
  std::array<TrigPlane, 4> re, im;

  // `active_axes` limits which axes carry nonzero frequencies so thin
  // lattices stay exact along the inactive ones.
  static TrigField random(std::mt19937_64& rng, int modes_per_plane, int active_axes = 4) {
    std::uniform_int_distribution<int> freq(-2, 2);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    TrigField f;
    auto fill = [&](TrigPlane& p) {
      for (int i = 0; i < modes_per_plane; ++i) {
        TrigMode md;
        for (int a = 0; a < active_axes; ++a) md.m[a] = freq(rng);
        md.amp = amp(rng);
        md.phase = phase(rng);
        p.modes.push_back(md);
      }
    };
    for (int k = 0; k < 4; ++k) {
      fill(f.re[k]);
      fill(f.im[k]);
    }
    return f;
  }

  std::array<octomax::ComplexScalar, 4> Y(const std::array<double, 4>& x) const {
    std::array<octomax::ComplexScalar, 4> out;
    for (int k = 0; k < 4; ++k) out[k] = {re[k].value(x), im[k].value(x)};
    return out;
  }
  std::array<octomax::ComplexScalar, 4> dY(const std::array<double, 4>& x, int axis) const {
    std::array<octomax::ComplexScalar, 4> out;
    for (int k = 0; k < 4; ++k) out[k] = {re[k].derivative(x, axis), im[k].derivative(x, axis)};
    return out;
  }

  octomax::FieldGrid4D sample(const octomax::Lattice4D& lat) const {
    return octomax::FieldGrid4D::sample(lat, [this](const std::array<double, 4>& x) { return Y(x); });
  }
};

// The compact derivative evaluated from analytic partials (t-form):
//   [d_t Y0 - d_j Y_j] e0 + [d_j Y0 + d_t Y_j + (curl Y)_j] e_j.
inline octomax::Octonion analytic_D_time(const TrigField& f, const std::array<double, 4>& x) {
  using octomax::ComplexScalar;
  const auto d0 = f.dY(x, 0);
  const auto d1 = f.dY(x, 1);
  const auto d2 = f.dY(x, 2);
  const auto d3 = f.dY(x, 3);
  std::array<ComplexScalar, 4> c;
  c[0] = d0[0] - d1[1] - d2[2] - d3[3];
  c[1] = d1[0] + d0[1] + (d2[3] - d3[2]);
  c[2] = d2[0] + d0[2] + (d3[1] - d1[3]);
  c[3] = d3[0] + d0[3] + (d1[2] - d2[1]);
  octomax::Octonion o;
  o.y[0] = c[0].re;
  o.y[7] = c[0].im;
  for (int j = 1; j <= 3; ++j) {
    o.y[j] = c[j].re;
    o.y[j + 3] = c[j].im;
  }
  return o;
}

// Rotated-form derivative assembled literally from the split into real and
// e7 parts, using discrete partials of the sampled planes:
//   e0 [ d0 Y0^(1) - d_j Y_j^(0) + (d_j Y0^(0) + d0 Y_j^(1) + (curl Y^(0))_j) e_j ]
// + e7 [ -d0 Y0^(0) - d_j Y_j^(1) + (d_j Y0^(1) - d0 Y_j^(0) + (curl Y^(1))_j) e_j ].
inline octomax::OctonionField literal_D_wick(const octomax::FieldGrid4D& f) {
  using namespace octomax;
  const Lattice4D& lat = f.lattice;
  std::array<std::array<std::vector<double>, 4>, 4> dre, dim;  // [axis][component]
  for (int axis = 0; axis < 4; ++axis)
    for (int k = 0; k < 4; ++k) {
      dre[axis][k] = diff1(f.Y[k].re, lat, axis);
      dim[axis][k] = diff1(f.Y[k].im, lat, axis);
    }
  OctonionField out = OctonionField::zeros(lat);
  const std::size_t N = lat.size();
  for (std::size_t s = 0; s < N; ++s) {
    out.comp[0][s] = dim[0][0][s] - dre[1][1][s] - dre[2][2][s] - dre[3][3][s];
    out.comp[7][s] = -dre[0][0][s] - dim[1][1][s] - dim[2][2][s] - dim[3][3][s];
    const double curl_re[3] = {dre[2][3][s] - dre[3][2][s], dre[3][1][s] - dre[1][3][s],
                               dre[1][2][s] - dre[2][1][s]};
    const double curl_im[3] = {dim[2][3][s] - dim[3][2][s], dim[3][1][s] - dim[1][3][s],
                               dim[1][2][s] - dim[2][1][s]};
    for (int j = 1; j <= 3; ++j) {
      out.comp[j][s] = dre[j][0][s] + dim[0][j][s] + curl_re[j - 1];
      out.comp[j + 3][s] = dim[j][0][s] - dre[0][j][s] + curl_im[j - 1];
    }
  }
  return out;
}

}  // namespace fixtures

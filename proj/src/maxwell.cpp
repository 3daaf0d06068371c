#include "octomax/maxwell.hpp"

#include <cmath>
#include <stdexcept>

namespace octomax {

const std::array<const char*, 4> kResidualChannelNames = {"gauss_e", "gauss_m", "faraday",
                                                          "ampere"};

MaxwellState MaxwellState::zeros(const Lattice3D& lat, double dt) {
  MaxwellState s;
  s.lattice = lat;
  s.dt = dt;
  const std::size_t N = lat.size();
  for (int k = 0; k < 3; ++k) {
    s.E[k].assign(N, 0.0);
    s.H[k].assign(N, 0.0);
    s.j_e[k].assign(N, 0.0);
    s.j_m[k].assign(N, 0.0);
  }
  s.rho_e.assign(N, 0.0);
  s.rho_m.assign(N, 0.0);
  return s;
}

namespace {

Lattice3D spatial_lattice(const Lattice4D& lat) {
  return Lattice3D({lat.n[1], lat.n[2], lat.n[3]}, {lat.h[1], lat.h[2], lat.h[3]},
                   {lat.origin[1], lat.origin[2], lat.origin[3]}, lat.boundary);
}

void check_slice(const FieldGrid4D& f, int slice) {
  if (slice < 0 || slice >= f.lattice.n[0]) throw std::out_of_range("time slice out of range");
}

std::vector<double> take_slice(const std::vector<double>& plane, const Lattice4D& lat, int slice) {
  const std::size_t slice_size = lat.size() / static_cast<std::size_t>(lat.n[0]);
  const std::size_t base = static_cast<std::size_t>(slice) * slice_size;
  return std::vector<double>(plane.begin() + base, plane.begin() + base + slice_size);
}

void require_same_lattice(const Lattice3D& a, const Lattice3D& b) {
  if (!(a == b)) throw std::invalid_argument("lattice mismatch");
}

}  // namespace

std::vector<MaxwellState> extract_states(const FieldGrid4D& f) {
  std::vector<MaxwellState> out;
  out.reserve(static_cast<std::size_t>(f.lattice.n[0]));
  const Lattice3D lat3 = spatial_lattice(f.lattice);

  // sources once, from the 4D derivatives of Y0
  std::array<ComplexPlanes, 4> dY0;
  for (int axis = 0; axis < 4; ++axis) {
    dY0[axis].re = diff1(f.Y[0].re, f.lattice, axis);
    dY0[axis].im = diff1(f.Y[0].im, f.lattice, axis);
  }

  for (int slice = 0; slice < f.lattice.n[0]; ++slice) {
    MaxwellState s = MaxwellState::zeros(lat3, f.lattice.h[0]);
    for (int j = 0; j < 3; ++j) {
      s.E[j] = take_slice(f.Y[j + 1].re, f.lattice, slice);
      s.H[j] = take_slice(f.Y[j + 1].im, f.lattice, slice);
      // d_j Y0 = (j_m)_j - e7 (j_e)_j
      s.j_m[j] = take_slice(dY0[j + 1].re, f.lattice, slice);
      s.j_e[j] = take_slice(dY0[j + 1].im, f.lattice, slice);
      for (double& v : s.j_e[j]) v = -v;
    }
    // d0 Y0 = -rho_m + e7 rho_e
    s.rho_m = take_slice(dY0[0].re, f.lattice, slice);
    for (double& v : s.rho_m) v = -v;
    s.rho_e = take_slice(dY0[0].im, f.lattice, slice);
    out.push_back(std::move(s));
  }
  return out;
}

MaxwellState extract_state(const FieldGrid4D& f, int slice) {
  check_slice(f, slice);
  return extract_states(f)[static_cast<std::size_t>(slice)];
}

std::vector<double> divergence(const Vec3Field& F, const Lattice3D& lat) {
  std::vector<double> out(lat.size(), 0.0);
  for (int axis = 0; axis < 3; ++axis) {
    const auto d = diff1(F[axis], lat, axis);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] += d[s];
  }
  return out;
}

Vec3Field curl(const Vec3Field& F, const Lattice3D& lat) {
  Vec3Field out;
  const auto d1F2 = diff1(F[2], lat, 1);
  const auto d2F1 = diff1(F[1], lat, 2);
  const auto d2F0 = diff1(F[0], lat, 2);
  const auto d0F2 = diff1(F[2], lat, 0);
  const auto d0F1 = diff1(F[1], lat, 0);
  const auto d1F0 = diff1(F[0], lat, 1);
  const std::size_t N = lat.size();
  for (int k = 0; k < 3; ++k) out[k].resize(N);
  for (std::size_t s = 0; s < N; ++s) {
    out[0][s] = d1F2[s] - d2F1[s];
    out[1][s] = d2F0[s] - d0F2[s];
    out[2][s] = d0F1[s] - d1F0[s];
  }
  return out;
}

MaxwellResiduals residuals(const MaxwellState& s, const Vec3Field& dE_dt, const Vec3Field& dH_dt) {
  const Lattice3D& lat = s.lattice;
  for (int k = 0; k < 3; ++k)
    if (dE_dt[k].size() != lat.size() || dH_dt[k].size() != lat.size())
      throw std::invalid_argument("lattice mismatch");

  MaxwellResiduals r;
  r.lattice = lat;
  r.gauss_e = divergence(s.E, lat);
  r.gauss_m = divergence(s.H, lat);
  const std::size_t N = lat.size();
  for (std::size_t i = 0; i < N; ++i) {
    r.gauss_e[i] -= s.rho_e[i];
    r.gauss_m[i] -= s.rho_m[i];
  }
  const Vec3Field curlE = curl(s.E, lat);
  const Vec3Field curlH = curl(s.H, lat);
  for (int k = 0; k < 3; ++k) {
    r.faraday[k].resize(N);
    r.ampere[k].resize(N);
    for (std::size_t i = 0; i < N; ++i) {
      r.faraday[k][i] = curlE[k][i] + dH_dt[k][i] + s.j_m[k][i];
      r.ampere[k][i] = curlH[k][i] - dE_dt[k][i] - s.j_e[k][i];
    }
  }
  return r;
}

EightComponentSplit eight_component_split(const OctonionField& dO) {
  EightComponentSplit out;
  out.lattice = dO.lattice;
  out.e0 = dO.comp[0];
  out.e7 = dO.comp[7];
  for (int j = 0; j < 3; ++j) {
    out.e_j[j] = dO.comp[j + 1];
    out.e7e_j[j] = dO.comp[j + 4];  // e7 e_j lands on e_{j+3}
  }
  return out;
}

MaxwellState duality_rotate(const MaxwellState& s, DualityAngle theta) {
  const double c = std::cos(theta.radians);
  const double sn = std::sin(theta.radians);
  MaxwellState out = s;
  auto rotate = [&](std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double xi = x[i], yi = y[i];
      x[i] = c * xi - sn * yi;
      y[i] = sn * xi + c * yi;
    }
  };
  rotate(out.rho_e, out.rho_m);
  for (int k = 0; k < 3; ++k) {
    rotate(out.j_e[k], out.j_m[k]);
    rotate(out.E[k], out.H[k]);
  }
  return out;
}

ContinuityResiduals continuity_residuals(const std::vector<MaxwellState>& states) {
  if (states.size() < 3) throw std::invalid_argument("continuity needs at least 3 time slices");
  const Lattice3D& lat = states.front().lattice;
  const double dt = states.front().dt;
  if (!(dt > 0.0)) throw std::invalid_argument("time spacing must be positive");
  for (const auto& s : states) require_same_lattice(lat, s.lattice);

  ContinuityResiduals out;
  out.lattice = lat;
  out.first_slice = 1;
  const std::size_t N = lat.size();
  for (std::size_t t = 1; t + 1 < states.size(); ++t) {
    std::vector<double> re(N), rm(N);
    const auto div_je = divergence(states[t].j_e, lat);
    const auto div_jm = divergence(states[t].j_m, lat);
    for (std::size_t i = 0; i < N; ++i) {
      re[i] = (states[t + 1].rho_e[i] - states[t - 1].rho_e[i]) / (2.0 * dt) + div_je[i];
      rm[i] = (states[t + 1].rho_m[i] - states[t - 1].rho_m[i]) / (2.0 * dt) + div_jm[i];
    }
    out.electric.push_back(std::move(re));
    out.magnetic.push_back(std::move(rm));
  }
  return out;
}

ComplexField4D dalembertian(const ComplexField4D& Y0) {
  const Lattice4D& lat = Y0.lattice;
  ComplexField4D out;
  out.lattice = lat;
  out.v.re = diff2(Y0.v.re, lat, 0);
  out.v.im = diff2(Y0.v.im, lat, 0);
  for (int axis = 1; axis < 4; ++axis) {
    const auto d2re = diff2(Y0.v.re, lat, axis);
    const auto d2im = diff2(Y0.v.im, lat, axis);
    for (std::size_t s = 0; s < out.v.re.size(); ++s) {
      out.v.re[s] -= d2re[s];
      out.v.im[s] -= d2im[s];
    }
  }
  return out;
}

namespace {

std::vector<char> interior_mask3(const Lattice3D& lat) {
  std::vector<char> mask(lat.size(), 1);
  if (lat.boundary == Boundary::periodic) return mask;
  std::size_t s = 0;
  for (int i0 = 0; i0 < lat.n[0]; ++i0)
    for (int i1 = 0; i1 < lat.n[1]; ++i1)
      for (int i2 = 0; i2 < lat.n[2]; ++i2, ++s) {
        const bool edge = i0 == 0 || i0 == lat.n[0] - 1 || i1 == 0 || i1 == lat.n[1] - 1 ||
                          i2 == 0 || i2 == lat.n[2] - 1;
        if (edge) mask[s] = 0;
      }
  return mask;
}

InteriorNorms reduce(const std::vector<double>& mag, const std::vector<char>& mask) {
  InteriorNorms out;
  double sum2 = 0.0;
  std::size_t count = 0;
  for (std::size_t s = 0; s < mag.size(); ++s) {
    if (!mask[s]) continue;
    out.max_abs = std::max(out.max_abs, std::fabs(mag[s]));
    sum2 += mag[s] * mag[s];
    ++count;
  }
  out.l2 = count ? std::sqrt(sum2 / static_cast<double>(count)) : 0.0;
  return out;
}

std::vector<double> vector_magnitude(const Vec3Field& F) {
  std::vector<double> mag(F[0].size());
  for (std::size_t s = 0; s < mag.size(); ++s)
    mag[s] = std::sqrt(F[0][s] * F[0][s] + F[1][s] * F[1][s] + F[2][s] * F[2][s]);
  return mag;
}

}  // namespace

InteriorNorms interior_norms3(const std::vector<double>& v, const Lattice3D& lat) {
  if (v.size() != lat.size()) throw std::invalid_argument("field size does not match lattice");
  return reduce(v, interior_mask3(lat));
}

InteriorNorms residual_vector_norms(const MaxwellResiduals& r) {
  const auto mask = interior_mask3(r.lattice);
  std::vector<double> mag(r.gauss_e.size());
  for (std::size_t s = 0; s < mag.size(); ++s) {
    double m2 = r.gauss_e[s] * r.gauss_e[s] + r.gauss_m[s] * r.gauss_m[s];
    for (int k = 0; k < 3; ++k)
      m2 += r.faraday[k][s] * r.faraday[k][s] + r.ampere[k][s] * r.ampere[k][s];
    mag[s] = std::sqrt(m2);
  }
  return reduce(mag, mask);
}

std::array<InteriorNorms, 4> residual_channel_norms(const MaxwellResiduals& r) {
  const auto mask = interior_mask3(r.lattice);
  return {reduce(r.gauss_e, mask), reduce(r.gauss_m, mask),
          reduce(vector_magnitude(r.faraday), mask), reduce(vector_magnitude(r.ampere), mask)};
}

}  // namespace octomax

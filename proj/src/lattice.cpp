#include "octomax/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace octomax {

namespace {

void validate(int n, double h) {
  if (n < 1) throw std::invalid_argument("lattice axis needs at least one point");
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("lattice spacing must be positive and finite");
}

void require_stencil(int n) {
  if (n < 4) throw std::invalid_argument("lattice too small for the stencil (need >= 4 points per differentiated axis)");
}

}  // namespace

Lattice4D::Lattice4D(std::array<int, 4> n_, std::array<double, 4> h_,
                     std::array<double, 4> origin_, Boundary b)
    : n(n_), h(h_), origin(origin_), boundary(b) {
  for (int k = 0; k < 4; ++k) validate(n[k], h[k]);
}

Lattice3D::Lattice3D(std::array<int, 3> n_, std::array<double, 3> h_,
                     std::array<double, 3> origin_, Boundary b)
    : n(n_), h(h_), origin(origin_), boundary(b) {
  for (int k = 0; k < 3; ++k) validate(n[k], h[k]);
}

void diff1_lines(const double* f, double* out, std::size_t outer, int n, std::size_t inner,
                 double h, Boundary b) {
  require_stencil(n);
  const double inv2h = 1.0 / (2.0 * h);
  for (std::size_t o = 0; o < outer; ++o) {
    const double* fo = f + o * static_cast<std::size_t>(n) * inner;
    double* go = out + o * static_cast<std::size_t>(n) * inner;
    for (std::size_t s = 0; s < inner; ++s) {
      auto at = [&](int i) { return fo[static_cast<std::size_t>(i) * inner + s]; };
      auto put = [&](int i, double v) { go[static_cast<std::size_t>(i) * inner + s] = v; };
      for (int i = 1; i + 1 < n; ++i) put(i, (at(i + 1) - at(i - 1)) * inv2h);
      if (b == Boundary::periodic) {
        put(0, (at(1) - at(n - 1)) * inv2h);
        put(n - 1, (at(0) - at(n - 2)) * inv2h);
      } else {
        put(0, (-3.0 * at(0) + 4.0 * at(1) - at(2)) * inv2h);
        put(n - 1, (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) * inv2h);
      }
    }
  }
}

void diff2_lines(const double* f, double* out, std::size_t outer, int n, std::size_t inner,
                 double h, Boundary b) {
  require_stencil(n);
  const double invh2 = 1.0 / (h * h);
  for (std::size_t o = 0; o < outer; ++o) {
    const double* fo = f + o * static_cast<std::size_t>(n) * inner;
    double* go = out + o * static_cast<std::size_t>(n) * inner;
    for (std::size_t s = 0; s < inner; ++s) {
      auto at = [&](int i) { return fo[static_cast<std::size_t>(i) * inner + s]; };
      auto put = [&](int i, double v) { go[static_cast<std::size_t>(i) * inner + s] = v; };
      for (int i = 1; i + 1 < n; ++i) put(i, (at(i + 1) - 2.0 * at(i) + at(i - 1)) * invh2);
      if (b == Boundary::periodic) {
        put(0, (at(1) - 2.0 * at(0) + at(n - 1)) * invh2);
        put(n - 1, (at(0) - 2.0 * at(n - 1) + at(n - 2)) * invh2);
      } else {
        put(0, (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) * invh2);
        put(n - 1, (2.0 * at(n - 1) - 5.0 * at(n - 2) + 4.0 * at(n - 3) - at(n - 4)) * invh2);
      }
    }
  }
}

namespace {

template <typename Lat, int Rank>
std::vector<double> diff_impl(const std::vector<double>& f, const Lat& lat, int axis, bool second) {
  if (axis < 0 || axis >= Rank) throw std::out_of_range("derivative axis out of range");
  if (f.size() != lat.size()) throw std::invalid_argument("field size does not match lattice");
  std::size_t outer = 1, inner = 1;
  for (int k = 0; k < axis; ++k) outer *= static_cast<std::size_t>(lat.n[k]);
  for (int k = axis + 1; k < Rank; ++k) inner *= static_cast<std::size_t>(lat.n[k]);
  std::vector<double> out(f.size());
  if (second)
    diff2_lines(f.data(), out.data(), outer, lat.n[axis], inner, lat.h[axis], lat.boundary);
  else
    diff1_lines(f.data(), out.data(), outer, lat.n[axis], inner, lat.h[axis], lat.boundary);
  return out;
}

}  // namespace

std::vector<double> diff1(const std::vector<double>& f, const Lattice4D& lat, int axis) {
  return diff_impl<Lattice4D, 4>(f, lat, axis, false);
}
std::vector<double> diff2(const std::vector<double>& f, const Lattice4D& lat, int axis) {
  return diff_impl<Lattice4D, 4>(f, lat, axis, true);
}
std::vector<double> diff1(const std::vector<double>& f, const Lattice3D& lat, int axis) {
  return diff_impl<Lattice3D, 3>(f, lat, axis, false);
}
std::vector<double> diff2(const std::vector<double>& f, const Lattice3D& lat, int axis) {
  return diff_impl<Lattice3D, 3>(f, lat, axis, true);
}

}  // namespace octomax

#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace octomax {

enum class Boundary {
  periodic,   // stencils wrap around
  one_sided,  // second-order one-sided stencils at the edges
};

// Uniform 4D lattice; axis 0 is the evolution axis (t before the rotation to
// x0, x0 after it), axes 1..3 are spatial.
struct Lattice4D {
  std::array<int, 4> n{};
  std::array<double, 4> h{};
  std::array<double, 4> origin{};
  Boundary boundary = Boundary::periodic;

  Lattice4D() = default;
  Lattice4D(std::array<int, 4> n_, std::array<double, 4> h_,
            std::array<double, 4> origin_ = {}, Boundary b = Boundary::periodic);

  std::size_t size() const {
    return static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(n[1]) *
           static_cast<std::size_t>(n[2]) * static_cast<std::size_t>(n[3]);
  }
  std::size_t index(int i0, int i1, int i2, int i3) const {
    return ((static_cast<std::size_t>(i0) * n[1] + i1) * n[2] + i2) * n[3] + i3;
  }
  double coord(int axis, int i) const { return origin[axis] + h[axis] * i; }
  std::array<double, 4> site(int i0, int i1, int i2, int i3) const {
    return {coord(0, i0), coord(1, i1), coord(2, i2), coord(3, i3)};
  }

  friend bool operator==(const Lattice4D& a, const Lattice4D& b) {
    return a.n == b.n && a.h == b.h && a.origin == b.origin && a.boundary == b.boundary;
  }
};

// Uniform 3D spatial lattice (time handled separately by the consumers).
struct Lattice3D {
  std::array<int, 3> n{};
  std::array<double, 3> h{};
  std::array<double, 3> origin{};
  Boundary boundary = Boundary::periodic;

  Lattice3D() = default;
  Lattice3D(std::array<int, 3> n_, std::array<double, 3> h_,
            std::array<double, 3> origin_ = {}, Boundary b = Boundary::periodic);

  std::size_t size() const {
    return static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(n[1]) *
           static_cast<std::size_t>(n[2]);
  }
  std::size_t index(int i0, int i1, int i2) const {
    return (static_cast<std::size_t>(i0) * n[1] + i1) * n[2] + i2;
  }
  double coord(int axis, int i) const { return origin[axis] + h[axis] * i; }
  std::array<double, 3> site(int i0, int i1, int i2) const {
    return {coord(0, i0), coord(1, i1), coord(2, i2)};
  }

  friend bool operator==(const Lattice3D& a, const Lattice3D& b) {
    return a.n == b.n && a.h == b.h && a.origin == b.origin && a.boundary == b.boundary;
  }
};

// Second-order first derivative of a flat array seen as (outer, n, inner):
// central differences inside, periodic wrap or one-sided stencils at the
// edges. Requires n >= 4 so every stencil fits.
void diff1_lines(const double* f, double* out, std::size_t outer, int n, std::size_t inner,
                 double h, Boundary b);

// Second-order second derivative with the same decomposition and boundary
// handling (4-point one-sided stencils at the edges).
void diff2_lines(const double* f, double* out, std::size_t outer, int n, std::size_t inner,
                 double h, Boundary b);

// Derivative along one axis of a scalar sample vector on a 4D lattice.
std::vector<double> diff1(const std::vector<double>& f, const Lattice4D& lat, int axis);
std::vector<double> diff2(const std::vector<double>& f, const Lattice4D& lat, int axis);

// Same on a 3D lattice.
std::vector<double> diff1(const std::vector<double>& f, const Lattice3D& lat, int axis);
std::vector<double> diff2(const std::vector<double>& f, const Lattice3D& lat, int axis);

}  // namespace octomax

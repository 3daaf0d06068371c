#pragma once

#include <array>
#include <functional>
#include <vector>

#include "octomax/lattice.hpp"
#include "octomax/octonion.hpp"

namespace octomax {

// Sample planes of a field with values in the (e0, e7) plane.
struct ComplexPlanes {
  std::vector<double> re, im;
};

// A single complex-valued scalar field on a 4D lattice.
struct ComplexField4D {
  Lattice4D lattice;
  ComplexPlanes v;
};

// Sampled quaternion-pair field: four complex components Y0..Y3, stored
// component-major (one re plane and one im plane per component).
struct FieldGrid4D {
  Lattice4D lattice;
  std::array<ComplexPlanes, 4> Y;

  static FieldGrid4D zeros(const Lattice4D& lat);
  // Samples Y(x) at every lattice site.
  static FieldGrid4D sample(
      const Lattice4D& lat,
      const std::function<std::array<ComplexScalar, 4>(const std::array<double, 4>&)>& fn);

  ComplexScalar at(int k, std::size_t site) const {
    return {Y[k].re[site], Y[k].im[site]};
  }
  ComplexField4D component(int k) const { return {lattice, Y[k]}; }
};

// Octonion-valued samples, stored as eight coefficient planes e0..e7.
struct OctonionField {
  Lattice4D lattice;
  std::array<std::vector<double>, 8> comp;

  static OctonionField zeros(const Lattice4D& lat);
  Octonion at(std::size_t site) const;
  double max_abs() const;
};

double max_abs_diff(const OctonionField& a, const OctonionField& b);

// Derivative of a quaternion-pair field with axis 0 read as t:
//   [d_t Y0 - d_j Y_j] e0 + [d_j Y0 + d_t Y_j + (curl Y)_j] e_j,
// complex coefficients carried through linearly.
OctonionField apply_D_time(const FieldGrid4D& f);

// Same operator computed through the 4x4 matrix form: the sign/index pattern
// of the representation is applied to both the operator and the field, the
// matrix product is taken, and the octonion is read back from the first
// column of the pattern. Agrees with apply_D_time up to summation order.
OctonionField apply_D_matrix(const FieldGrid4D& f);

// Derivative after the rotation e0 t -> e7 x0, i.e. with d_t replaced by
// -e7 d_0; axis 0 is read as x0.
OctonionField apply_D_wick(const FieldGrid4D& f);

// Interior mask: true where every stencil on the lattice is central. Under
// periodic boundaries every site qualifies; under one-sided boundaries the
// first and last index of each axis are excluded.
std::vector<char> interior_mask(const Lattice4D& lat);

// Max-abs and L2 of a sample plane restricted to interior sites.
struct InteriorNorms {
  double max_abs = 0.0;
  double l2 = 0.0;
};
InteriorNorms interior_norms(const std::vector<double>& v, const Lattice4D& lat);

}  // namespace octomax

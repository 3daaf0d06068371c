#include "octomax/field_calculus.hpp"

#include <cmath>
#include <stdexcept>

#include "octomax/matrix_rep.hpp"

namespace octomax {

FieldGrid4D FieldGrid4D::zeros(const Lattice4D& lat) {
  FieldGrid4D f;
  f.lattice = lat;
  for (auto& c : f.Y) {
    c.re.assign(lat.size(), 0.0);
    c.im.assign(lat.size(), 0.0);
  }
  return f;
}

FieldGrid4D FieldGrid4D::sample(
    const Lattice4D& lat,
    const std::function<std::array<ComplexScalar, 4>(const std::array<double, 4>&)>& fn) {
  FieldGrid4D f = zeros(lat);
  std::size_t s = 0;
  for (int i0 = 0; i0 < lat.n[0]; ++i0)
    for (int i1 = 0; i1 < lat.n[1]; ++i1)
      for (int i2 = 0; i2 < lat.n[2]; ++i2)
        for (int i3 = 0; i3 < lat.n[3]; ++i3, ++s) {
          const auto v = fn(lat.site(i0, i1, i2, i3));
          for (int k = 0; k < 4; ++k) {
            f.Y[k].re[s] = v[k].re;
            f.Y[k].im[s] = v[k].im;
          }
        }
  return f;
}

OctonionField OctonionField::zeros(const Lattice4D& lat) {
  OctonionField o;
  o.lattice = lat;
  for (auto& c : o.comp) c.assign(lat.size(), 0.0);
  return o;
}

Octonion OctonionField::at(std::size_t site) const {
  Octonion o;
  for (int k = 0; k < 8; ++k) o.y[k] = comp[k][site];
  return o;
}

double OctonionField::max_abs() const {
  double worst = 0.0;
  for (const auto& c : comp)
    for (double v : c) worst = std::max(worst, std::fabs(v));
  return worst;
}

double max_abs_diff(const OctonionField& a, const OctonionField& b) {
  if (!(a.lattice == b.lattice)) throw std::invalid_argument("lattice mismatch");
  double worst = 0.0;
  for (int k = 0; k < 8; ++k)
    for (std::size_t s = 0; s < a.comp[k].size(); ++s)
      worst = std::max(worst, std::fabs(a.comp[k][s] - b.comp[k][s]));
  return worst;
}

namespace {

// All sixteen first derivatives d_axis Y_k as complex planes.
struct DerivativePlanes {
  std::array<std::array<ComplexPlanes, 4>, 4> d;  // d[axis][component]
  ComplexScalar at(int axis, int k, std::size_t s) const {
    return {d[axis][k].re[s], d[axis][k].im[s]};
  }
};

DerivativePlanes all_derivatives(const FieldGrid4D& f) {
  DerivativePlanes out;
  for (int axis = 0; axis < 4; ++axis)
    for (int k = 0; k < 4; ++k) {
      out.d[axis][k].re = diff1(f.Y[k].re, f.lattice, axis);
      out.d[axis][k].im = diff1(f.Y[k].im, f.lattice, axis);
    }
  return out;
}

void store(OctonionField& out, std::size_t s, const std::array<ComplexScalar, 4>& c) {
  out.comp[0][s] = c[0].re;
  out.comp[7][s] = c[0].im;
  for (int j = 1; j <= 3; ++j) {
    out.comp[j][s] = c[j].re;
    out.comp[j + 3][s] = c[j].im;
  }
}

// Shared compact form: the t-derivative enters through `tm` (1 before the
// rotation, -e7 after it).
OctonionField apply_D_compact(const FieldGrid4D& f, ComplexScalar tm) {
  const DerivativePlanes D = all_derivatives(f);
  OctonionField out = OctonionField::zeros(f.lattice);
  const std::size_t N = f.lattice.size();
  for (std::size_t s = 0; s < N; ++s) {
    std::array<ComplexScalar, 4> c;
    c[0] = tm * D.at(0, 0, s) - D.at(1, 1, s) - D.at(2, 2, s) - D.at(3, 3, s);
    c[1] = D.at(1, 0, s) + tm * D.at(0, 1, s) + D.at(2, 3, s) - D.at(3, 2, s);
    c[2] = D.at(2, 0, s) + tm * D.at(0, 2, s) + D.at(3, 1, s) - D.at(1, 3, s);
    c[3] = D.at(3, 0, s) + tm * D.at(0, 3, s) + D.at(1, 2, s) - D.at(2, 1, s);
    store(out, s, c);
  }
  return out;
}

}  // namespace

OctonionField apply_D_time(const FieldGrid4D& f) { return apply_D_compact(f, {1.0, 0.0}); }

OctonionField apply_D_wick(const FieldGrid4D& f) { return apply_D_compact(f, {0.0, -1.0}); }

OctonionField apply_D_matrix(const FieldGrid4D& f) {
  const DerivativePlanes D = all_derivatives(f);
  const auto& pat = rep_pattern();
  OctonionField out = OctonionField::zeros(f.lattice);
  const std::size_t N = f.lattice.size();
  // Pattern column 0 carries +Y0, +Y3, +Y2, +Y1; reading the product column
  // back through it recovers the octonion.
  for (std::size_t s = 0; s < N; ++s) {
    std::array<ComplexScalar, 4> col;  // product entries (i, 0)
    for (int i = 0; i < 4; ++i) {
      ComplexScalar acc{};
      for (int l = 0; l < 4; ++l) {
        const RepEntry op = pat[i][l];   // sign and axis of the operator entry
        const RepEntry fe = pat[l][0];   // sign and component of the field entry
        const double sign = static_cast<double>(op.sign * fe.sign);
        acc += sign * D.at(op.index, fe.index, s);
      }
      col[i] = acc;
    }
    store(out, s, {col[0], col[3], col[2], col[1]});
  }
  return out;
}

std::vector<char> interior_mask(const Lattice4D& lat) {
  std::vector<char> mask(lat.size(), 1);
  if (lat.boundary == Boundary::periodic) return mask;
  std::size_t s = 0;
  for (int i0 = 0; i0 < lat.n[0]; ++i0)
    for (int i1 = 0; i1 < lat.n[1]; ++i1)
      for (int i2 = 0; i2 < lat.n[2]; ++i2)
        for (int i3 = 0; i3 < lat.n[3]; ++i3, ++s) {
          const bool edge = i0 == 0 || i0 == lat.n[0] - 1 || i1 == 0 || i1 == lat.n[1] - 1 ||
                            i2 == 0 || i2 == lat.n[2] - 1 || i3 == 0 || i3 == lat.n[3] - 1;
          if (edge) mask[s] = 0;
        }
  return mask;
}

InteriorNorms interior_norms(const std::vector<double>& v, const Lattice4D& lat) {
  if (v.size() != lat.size()) throw std::invalid_argument("field size does not match lattice");
  const std::vector<char> mask = interior_mask(lat);
  InteriorNorms out;
  double sum2 = 0.0;
  std::size_t count = 0;
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (!mask[s]) continue;
    out.max_abs = std::max(out.max_abs, std::fabs(v[s]));
    sum2 += v[s] * v[s];
    ++count;
  }
  out.l2 = count ? std::sqrt(sum2 / static_cast<double>(count)) : 0.0;
  return out;
}

}  // namespace octomax

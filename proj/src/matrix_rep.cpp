#include "octomax/matrix_rep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace octomax {

const std::array<std::array<RepEntry, 4>, 4>& rep_pattern() {
  static const std::array<std::array<RepEntry, 4>, 4> pattern = {{
      {{{+1, 0}, {-1, 3}, {-1, 2}, {-1, 1}}},
      {{{+1, 3}, {+1, 0}, {+1, 1}, {-1, 2}}},
      {{{+1, 2}, {-1, 1}, {+1, 0}, {+1, 3}}},
      {{{+1, 1}, {+1, 2}, {-1, 3}, {+1, 0}}},
  }};
  return pattern;
}

RepMatrix pi(const Octonion& a) {
  const ComplexPairForm p = to_complex_pairs(a);
  const auto& pat = rep_pattern();
  RepMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.m[i][j] = static_cast<double>(pat[i][j].sign) * p.Y[pat[i][j].index];
  return out;
}

RepMatrix rep_identity() {
  RepMatrix out;
  for (int i = 0; i < 4; ++i) out.m[i][i] = {1.0, 0.0};
  return out;
}

RepMatrix rep_mul(const RepMatrix& A, const RepMatrix& B) {
  RepMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      ComplexScalar s{};
      for (int l = 0; l < 4; ++l) s += A.m[i][l] * B.m[l][j];
      out.m[i][j] = s;
    }
  return out;
}

RepMatrix rep_scale(ComplexScalar s, const RepMatrix& A) {
  RepMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[i][j] = s * A.m[i][j];
  return out;
}

RepMatrix rep_add(const RepMatrix& A, const RepMatrix& B) {
  RepMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[i][j] = A.m[i][j] + B.m[i][j];
  return out;
}

RepMatrix rep_sub(const RepMatrix& A, const RepMatrix& B) {
  RepMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[i][j] = A.m[i][j] - B.m[i][j];
  return out;
}

double rep_max_abs_diff(const RepMatrix& A, const RepMatrix& B) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, abs(A.m[i][j] - B.m[i][j]));
  return worst;
}

Mat2c pauli_sigma(int j) {
  using namespace std::complex_literals;
  switch (j) {
    case 1:
      return {{{0.0, 1.0}, {1.0, 0.0}}};
    case 2:
      return {{{0.0, -1.0i}, {1.0i, 0.0}}};
    case 3:
      return {{{1.0, 0.0}, {0.0, -1.0}}};
    default:
      throw std::out_of_range("pauli index must be in 1..3");
  }
}

Mat2c pauli_image(int j) {
  using namespace std::complex_literals;
  if (j == 0) return {{{1.0, 0.0}, {0.0, 1.0}}};
  if (j < 1 || j > 3) throw std::out_of_range("pauli image index must be in 0..3");
  Mat2c s = pauli_sigma(j);
  for (auto& row : s)
    for (auto& v : row) v *= -1.0i;
  return s;
}

RealQuatMatrix real_quat_image(int j) {
  // J = [[0,1],[-1,0]], the real stand-in for the imaginary unit.
  switch (j) {
    case 0:
      return RealQuatMatrix{{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}};
    case 1:  // [[0, -J], [-J, 0]]
      return RealQuatMatrix{{{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}}};
    case 2:  // [[0, -1], [1, 0]] blocks
      return RealQuatMatrix{{{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}}};
    case 3:  // [[-J, 0], [0, J]]
      return RealQuatMatrix{{{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}}};
    default:
      throw std::out_of_range("real quaternion image index must be in 0..3");
  }
}

RealQuatMatrix kron2(const Mat2d& outer, const Mat2d& inner) {
  RealQuatMatrix out;
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          out.m[2 * bi + i][2 * bj + j] = outer[bi][bj] * inner[i][j];
  return out;
}

RealQuatMatrix real_quat_mul(const RealQuatMatrix& A, const RealQuatMatrix& B) {
  RealQuatMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int l = 0; l < 4; ++l) s += A.m[i][l] * B.m[l][j];
      out.m[i][j] = s;
    }
  return out;
}

namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string format_rep_matrix(const RepMatrix& A) {
  std::array<std::array<std::string, 4>, 4> cells;
  std::size_t width = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const ComplexScalar v = A.m[i][j];
      std::string s;
      if (v.im == 0.0)
        s = format_number(v.re);
      else if (v.re == 0.0)
        s = format_number(v.im) + "i";
      else
        s = format_number(v.re) + (v.im < 0 ? "" : "+") + format_number(v.im) + "i";
      width = std::max(width, s.size());
      cells[i][j] = std::move(s);
    }
  std::string out;
  for (int i = 0; i < 4; ++i) {
    out += "[ ";
    for (int j = 0; j < 4; ++j) {
      std::string& s = cells[i][j];
      out += std::string(width - s.size(), ' ') + s;
      out += (j == 3) ? " ]\n" : "  ";
    }
  }
  return out;
}

std::string format_real_matrix(const RealQuatMatrix& A) {
  RepMatrix tmp;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) tmp.m[i][j] = {A.m[i][j], 0.0};
  return format_rep_matrix(tmp);
}

}  // namespace octomax

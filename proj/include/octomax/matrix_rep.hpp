#pragma once

#include <array>
#include <complex>
#include <string>

#include "octomax/octonion.hpp"

namespace octomax {

// 4x4 matrix over the (e0, e7) plane; image type of the representation map.
struct RepMatrix {
  std::array<std::array<ComplexScalar, 4>, 4> m{};
};

// 4x4 real matrix; image type of the quaternion-basis identification.
struct RealQuatMatrix {
  std::array<std::array<double, 4>, 4> m{};
};

// Entry layout of the representation: entry (i,j) holds sign * Y[index].
struct RepEntry {
  int sign;
  int index;
};

// The 16-entry sign/index pattern shared by the representation matrix and
// the matrix form of the derivative operator. Diagonal is +Y0 throughout.
const std::array<std::array<RepEntry, 4>, 4>& rep_pattern();

// Linear map sending an octonion in quaternion-pair form to its 4x4 matrix.
// It is not multiplicative on all of the algebra (matrix algebras are
// associative, octonions are not); it is multiplicative on the real span of
// {e0, e1, e2, e3}.
RepMatrix pi(const Octonion& a);

RepMatrix rep_identity();
RepMatrix rep_mul(const RepMatrix& A, const RepMatrix& B);
RepMatrix rep_scale(ComplexScalar s, const RepMatrix& A);
RepMatrix rep_add(const RepMatrix& A, const RepMatrix& B);
RepMatrix rep_sub(const RepMatrix& A, const RepMatrix& B);
double rep_max_abs_diff(const RepMatrix& A, const RepMatrix& B);

using Mat2c = std::array<std::array<std::complex<double>, 2>, 2>;
using Mat2d = std::array<std::array<double, 2>, 2>;

// Pauli matrix sigma_j, j in 1..3.
Mat2c pauli_sigma(int j);

// Quaternion-basis image in 2x2 complex matrices: identity for j=0,
// -i*sigma_j for j=1..3.
Mat2c pauli_image(int j);

// Quaternion-basis image in real 4x4 block matrices (j in 0..3): identity;
// [[0,-J],[-J,0]]; [[0,-1],[1,0]] blocks; [[-J,0],[0,J]] with J=[[0,1],[-1,0]].
RealQuatMatrix real_quat_image(int j);

// kron(outer, inner): blocks outer[i][j] * inner. The block matrices above
// arise as kron(sigma-factor, 2x2-factor), i.e. with the 2x2 factor acting
// inside each block.
RealQuatMatrix kron2(const Mat2d& outer, const Mat2d& inner);

RealQuatMatrix real_quat_mul(const RealQuatMatrix& A, const RealQuatMatrix& B);

// Fixed-width text table of a representation matrix ("a+bi" entries).
std::string format_rep_matrix(const RepMatrix& A);
std::string format_real_matrix(const RealQuatMatrix& A);

}  // namespace octomax

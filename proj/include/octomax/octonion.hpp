#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace octomax {

// Element of the commutative plane spanned by (e0, e7). Multiplication is
// ordinary complex arithmetic because e7^2 = -e0.
struct ComplexScalar {
  double re = 0.0;  // coefficient of e0
  double im = 0.0;  // coefficient of e7

  constexpr ComplexScalar() = default;
  constexpr ComplexScalar(double r, double i) : re(r), im(i) {}

  friend constexpr ComplexScalar operator+(ComplexScalar a, ComplexScalar b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr ComplexScalar operator-(ComplexScalar a, ComplexScalar b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr ComplexScalar operator-(ComplexScalar a) { return {-a.re, -a.im}; }
  friend constexpr ComplexScalar operator*(ComplexScalar a, ComplexScalar b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr ComplexScalar operator*(double s, ComplexScalar a) {
    return {s * a.re, s * a.im};
  }
  friend constexpr ComplexScalar operator*(ComplexScalar a, double s) { return s * a; }
  friend constexpr bool operator==(ComplexScalar a, ComplexScalar b) {
    return a.re == b.re && a.im == b.im;
  }
  ComplexScalar& operator+=(ComplexScalar b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  ComplexScalar& operator-=(ComplexScalar b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
};

double abs(ComplexScalar a);

// Signed structure constants f_abc (a,b,c in 1..7), completely antisymmetric,
// +1 on the seven oriented triples and their cyclic images, -1 on odd
// permutations, 0 otherwise. A mutable copy exists only to support the
// fault-injection hook of the `algebra-check` command; the shared instance
// returned by structure_constants() is immutable.
class StructureConstants {
 public:
  StructureConstants();

  // a, b, c in 1..7.
  int f(int a, int b, int c) const;

  // The seven oriented triples (a,b,c) with f_abc = +1.
  static const std::array<std::array<int, 3>, 7>& oriented_triples();

  // Fault-injection hook: flips the sign of a single table entry (zero
  // entries become +1) without touching its permutation partners, so both
  // the antisymmetry and the multiplication-table checks trip on it.
  void corrupt(int a, int b, int c);

  bool corrupted() const { return corrupted_; }

 private:
  static int idx(int a, int b, int c) { return ((a - 1) * 7 + (b - 1)) * 7 + (c - 1); }
  std::array<int8_t, 343> f_{};
  bool corrupted_ = false;
};

// Shared immutable table built from the oriented triples.
const StructureConstants& structure_constants();

// Octonion as 8 real coefficients over the basis e0..e7.
struct Octonion {
  std::array<double, 8> y{};

  Octonion() = default;
  // Validates that every coefficient is finite.
  explicit Octonion(const std::array<double, 8>& coeffs);

  static Octonion basis(int a);
  static Octonion zero() { return Octonion{}; }

  double& operator[](int k) { return y[static_cast<std::size_t>(k)]; }
  double operator[](int k) const { return y[static_cast<std::size_t>(k)]; }

  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a);
  friend Octonion operator*(double s, const Octonion& a);
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.y == b.y; }
};

// Quaternion-pair form: O = Y0 e0 + Y1 e1 + Y2 e2 + Y3 e3 with coefficients
// in the (e0, e7) plane.
struct ComplexPairForm {
  std::array<ComplexScalar, 4> Y{};
};

Octonion mul(const Octonion& a, const Octonion& b);
Octonion mul(const Octonion& a, const Octonion& b, const StructureConstants& sc);
Octonion conjugate(const Octonion& a);
double norm(const Octonion& a);
Octonion commutator(const Octonion& a, const Octonion& b);
Octonion anticommutator(const Octonion& a, const Octonion& b);
// (ab)c - a(bc)
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c);

ComplexPairForm to_complex_pairs(const Octonion& a);
Octonion from_complex_pairs(const ComplexPairForm& p);

// "y0 + y1 e1 + ..." with zero terms omitted; 17 significant digits.
std::string to_string(const Octonion& a);

}  // namespace octomax

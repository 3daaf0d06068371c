#include "octomax/octonion.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace octomax {

double abs(ComplexScalar a) { return std::hypot(a.re, a.im); }

const std::array<std::array<int, 3>, 7>& StructureConstants::oriented_triples() {
  static const std::array<std::array<int, 3>, 7> triples = {{
      {1, 2, 3}, {4, 7, 1}, {2, 5, 7}, {1, 6, 5}, {6, 2, 4}, {5, 4, 3}, {7, 3, 6}}};
  return triples;
}

StructureConstants::StructureConstants() {
  for (const auto& t : oriented_triples()) {
    const int a = t[0], b = t[1], c = t[2];
    // even permutations
    f_[idx(a, b, c)] = 1;
    f_[idx(b, c, a)] = 1;
    f_[idx(c, a, b)] = 1;
    // odd permutations
    f_[idx(b, a, c)] = -1;
    f_[idx(a, c, b)] = -1;
    f_[idx(c, b, a)] = -1;
  }
}

int StructureConstants::f(int a, int b, int c) const {
  if (a < 1 || a > 7 || b < 1 || b > 7 || c < 1 || c > 7)
    throw std::out_of_range("structure constant index must be in 1..7");
  return f_[idx(a, b, c)];
}

void StructureConstants::corrupt(int a, int b, int c) {
  if (a < 1 || a > 7 || b < 1 || b > 7 || c < 1 || c > 7)
    throw std::out_of_range("structure constant index must be in 1..7");
  int8_t& v = f_[idx(a, b, c)];
  v = (v == 0) ? 1 : static_cast<int8_t>(-v);
  corrupted_ = true;
}

const StructureConstants& structure_constants() {
  static const StructureConstants table;
  return table;
}

Octonion::Octonion(const std::array<double, 8>& coeffs) : y(coeffs) {
  for (double v : y)
    if (!std::isfinite(v)) throw std::invalid_argument("octonion coefficients must be finite");
}

Octonion Octonion::basis(int a) {
  if (a < 0 || a > 7) throw std::out_of_range("basis index must be in 0..7");
  Octonion o;
  o.y[static_cast<std::size_t>(a)] = 1.0;
  return o;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion o;
  for (int k = 0; k < 8; ++k) o.y[k] = a.y[k] + b.y[k];
  return o;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion o;
  for (int k = 0; k < 8; ++k) o.y[k] = a.y[k] - b.y[k];
  return o;
}

Octonion operator-(const Octonion& a) {
  Octonion o;
  for (int k = 0; k < 8; ++k) o.y[k] = -a.y[k];
  return o;
}

Octonion operator*(double s, const Octonion& a) {
  Octonion o;
  for (int k = 0; k < 8; ++k) o.y[k] = s * a.y[k];
  return o;
}

Octonion mul(const Octonion& a, const Octonion& b, const StructureConstants& sc) {
  Octonion out;
  // e0 acts as a two-sided identity.
  out.y[0] = a.y[0] * b.y[0];
  for (int k = 1; k < 8; ++k) out.y[k] = a.y[0] * b.y[k] + a.y[k] * b.y[0];
  // e_p e_q = -delta_pq e0 + f_pqc e_c
  for (int p = 1; p < 8; ++p) {
    out.y[0] -= a.y[p] * b.y[p];
    for (int q = 1; q < 8; ++q) {
      if (p == q) continue;
      const double prod = a.y[p] * b.y[q];
      for (int c = 1; c < 8; ++c) {
        const int s = sc.f(p, q, c);
        if (s) out.y[c] += s * prod;
      }
    }
  }
  return out;
}

Octonion mul(const Octonion& a, const Octonion& b) { return mul(a, b, structure_constants()); }

Octonion conjugate(const Octonion& a) {
  Octonion o = a;
  for (int k = 1; k < 8; ++k) o.y[k] = -o.y[k];
  return o;
}

double norm(const Octonion& a) {
  double s = 0.0;
  for (double v : a.y) s += v * v;
  return std::sqrt(s);
}

Octonion commutator(const Octonion& a, const Octonion& b) { return mul(a, b) - mul(b, a); }

Octonion anticommutator(const Octonion& a, const Octonion& b) { return mul(a, b) + mul(b, a); }

Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return mul(mul(a, b), c) - mul(a, mul(b, c));
}

ComplexPairForm to_complex_pairs(const Octonion& a) {
  ComplexPairForm p;
  p.Y[0] = {a.y[0], a.y[7]};
  for (int j = 1; j <= 3; ++j) p.Y[j] = {a.y[j], a.y[j + 3]};
  return p;
}

Octonion from_complex_pairs(const ComplexPairForm& p) {
  Octonion o;
  o.y[0] = p.Y[0].re;
  o.y[7] = p.Y[0].im;
  for (int j = 1; j <= 3; ++j) {
    o.y[j] = p.Y[j].re;
    o.y[j + 3] = p.Y[j].im;
  }
  return o;
}

std::string to_string(const Octonion& a) {
  std::string out;
  for (int k = 0; k < 8; ++k) {
    const double v = a.y[k];
    if (v == 0.0) continue;
    const bool neg = std::signbit(v);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const double m = std::fabs(v);
    if (m != 1.0 || k == 0) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", m);
      out += buf;
      if (k > 0) out += ' ';
    }
    if (k > 0) {
      out += 'e';
      out += static_cast<char>('0' + k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace octomax

#pragma once

// Independent reference computations used only by the test suites. Nothing
// here is allowed to call back into the implementation paths it checks.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

// Basis product e_a e_b = sign * e_index (a, b in 0..7), brute-forced from
// the identity rules, the Kronecker delta, and an explicit enumeration of
// all six permutations of each oriented triple.
struct BasisProduct {
  int sign = 0;
  int index = -1;
};

inline std::array<std::array<BasisProduct, 8>, 8> basis_table() {
  static const int triples[7][3] = {{1, 2, 3}, {4, 7, 1}, {2, 5, 7}, {1, 6, 5},
                                    {6, 2, 4}, {5, 4, 3}, {7, 3, 6}};
  std::array<std::array<BasisProduct, 8>, 8> t{};
  for (int b = 0; b < 8; ++b) t[0][b] = {1, b};
  for (int a = 1; a < 8; ++a) {
    t[a][0] = {1, a};
    t[a][a] = {-1, 0};
  }
  // every permutation of (p,q,r), with its parity
  const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  const int parity[6] = {1, 1, 1, -1, -1, -1};
  for (const auto& tr : triples)
    for (int p = 0; p < 6; ++p) {
      const int a = tr[perm[p][0]];
      const int b = tr[perm[p][1]];
      const int c = tr[perm[p][2]];
      t[a][b] = {parity[p], c};
    }
  return t;
}

// Reference multiply through the brute-forced table.
inline std::array<double, 8> table_mul(const std::array<double, 8>& a,
                                       const std::array<double, 8>& b) {
  static const auto table = basis_table();
  std::array<double, 8> out{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const BasisProduct p = table[i][j];
      out[static_cast<std::size_t>(p.index)] += p.sign * a[i] * b[j];
    }
  return out;
}

inline std::array<double, 8> random_coeffs(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::array<double, 8> c{};
  for (auto& v : c) v = dist(rng);
  return c;
}

// log2(coarse/fine): measured convergence order of one refinement step.
inline double refinement_order(double err_coarse, double err_fine) {
  return std::log2(err_coarse / err_fine);
}

}  // namespace oracles

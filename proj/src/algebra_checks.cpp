#include "octomax/algebra_checks.hpp"

#include <cmath>
#include <random>

namespace octomax {

namespace {

// Reference table built by a different route than the shared instance: the
// identity rules and the delta term directly, plus an explicit walk over all
// six permutations of each oriented triple with their parities.
struct RefEntry {
  int sign;
  int index;
};

std::array<std::array<RefEntry, 8>, 8> reference_table() {
  std::array<std::array<RefEntry, 8>, 8> t{};
  for (int b = 0; b < 8; ++b) t[0][b] = {1, b};
  for (int a = 1; a < 8; ++a) {
    t[a][0] = {1, a};
    t[a][a] = {-1, 0};
  }
  const auto& triples = StructureConstants::oriented_triples();
  const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  const int parity[6] = {1, 1, 1, -1, -1, -1};
  for (const auto& tr : triples)
    for (int p = 0; p < 6; ++p)
      t[tr[perm[p][0]]][tr[perm[p][1]]] = {parity[p], tr[perm[p][2]]};
  return t;
}

Octonion random_octonion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Octonion o;
  for (auto& v : o.y) v = dist(rng);
  return o;
}

}  // namespace

std::vector<PropertyCheck> run_algebra_checks(const StructureConstants& sc, unsigned seed,
                                              int samples) {
  std::vector<PropertyCheck> out;

  {
    PropertyCheck c{"multiplication-table", true, 0.0, 64};
    const auto ref = reference_table();
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const Octonion p = mul(Octonion::basis(a), Octonion::basis(b), sc);
        Octonion expected;
        expected.y[static_cast<std::size_t>(ref[a][b].index)] = ref[a][b].sign;
        const double err = norm(p - expected);
        c.worst_error = std::max(c.worst_error, err);
        if (err != 0.0) c.pass = false;
      }
    out.push_back(c);
  }

  {
    PropertyCheck c{"antisymmetry", true, 0.0, 343};
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; b <= 7; ++b)
        for (int cc = 1; cc <= 7; ++cc) {
          const int v = sc.f(a, b, cc);
          const int worst =
              std::max({std::abs(sc.f(b, a, cc) + v), std::abs(sc.f(a, cc, b) + v),
                        std::abs(sc.f(cc, b, a) + v), std::abs(sc.f(b, cc, a) - v),
                        std::abs(sc.f(cc, a, b) - v)});
          c.worst_error = std::max(c.worst_error, static_cast<double>(worst));
          if (worst != 0) c.pass = false;
        }
    out.push_back(c);
  }

  std::mt19937_64 rng(seed);

  {
    PropertyCheck c{"norm-composition", true, 0.0, samples};
    for (int it = 0; it < samples; ++it) {
      const Octonion a = random_octonion(rng);
      const Octonion b = random_octonion(rng);
      const double lhs = norm(mul(a, b, sc));
      const double rhs = norm(a) * norm(b);
      if (rhs == 0.0) continue;
      const double rel = std::fabs(lhs - rhs) / rhs;
      c.worst_error = std::max(c.worst_error, rel);
      if (rel > 1e-12) c.pass = false;
    }
    out.push_back(c);
  }

  {
    PropertyCheck c{"alternativity", true, 0.0, samples};
    auto assoc = [&sc](const Octonion& a, const Octonion& b, const Octonion& cc) {
      return mul(mul(a, b, sc), cc, sc) - mul(a, mul(b, cc, sc), sc);
    };
    for (int it = 0; it < samples; ++it) {
      const Octonion a = random_octonion(rng);
      const Octonion b = random_octonion(rng);
      const double scale = norm(a) * norm(a) * norm(b) + norm(a) * norm(b) * norm(b) + 1.0;
      const double err =
          std::max(norm(assoc(a, a, b)), norm(assoc(a, b, b))) / scale;
      c.worst_error = std::max(c.worst_error, err);
      if (err > 1e-12) c.pass = false;
    }
    out.push_back(c);
  }

  {
    PropertyCheck c{"subalgebra-closure", true, 0.0, 16 + 4};
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        const Octonion p = mul(Octonion::basis(a), Octonion::basis(b), sc);
        for (int k = 4; k < 8; ++k) {
          c.worst_error = std::max(c.worst_error, std::fabs(p.y[k]));
          if (p.y[k] != 0.0) c.pass = false;
        }
      }
    for (int a : {0, 7})
      for (int b : {0, 7}) {
        const Octonion p = mul(Octonion::basis(a), Octonion::basis(b), sc);
        for (int k = 1; k < 7; ++k) {
          c.worst_error = std::max(c.worst_error, std::fabs(p.y[k]));
          if (p.y[k] != 0.0) c.pass = false;
        }
      }
    out.push_back(c);
  }

  {
    PropertyCheck c{"non-associativity-witness", true, 0.0, 1};
    const Octonion w = mul(mul(Octonion::basis(1), Octonion::basis(2), sc), Octonion::basis(4), sc) -
                       mul(Octonion::basis(1), mul(Octonion::basis(2), Octonion::basis(4), sc), sc);
    const Octonion expected = -2.0 * Octonion::basis(5);
    c.worst_error = norm(w - expected);
    c.pass = c.worst_error == 0.0;
    out.push_back(c);
  }

  return out;
}

}  // namespace octomax

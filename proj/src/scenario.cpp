#include "octomax/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace octomax {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

double get(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, double>& params,
                    std::initializer_list<const char*> known) {
  for (const auto& [key, value] : params) {
    (void)value;
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) throw std::invalid_argument("unknown scenario parameter: " + key);
  }
}

}  // namespace

std::array<double, 2> Scenario::domain(int axis) const {
  (void)axis;
  return {0.0, kTwoPi};
}

std::array<ComplexScalar, 4> Scenario::Y(const std::array<double, 4>&) const {
  throw std::logic_error("scenario '" + name() + "' has no field form");
}

std::array<ComplexScalar, 4> Scenario::dY(const std::array<double, 4>&, int) const {
  throw std::logic_error("scenario '" + name() + "' has no field form");
}

AnalyticPoint Scenario::state(const std::array<double, 3>& xs, double x0) const {
  // Y_j = E_j + e7 H_j, d0 Y0 = -rho_m + e7 rho_e, d_j Y0 = (j_m)_j - e7 (j_e)_j
  const std::array<double, 4> x = {x0, xs[0], xs[1], xs[2]};
  const auto y = Y(x);
  const auto d0 = dY(x, 0);
  AnalyticPoint p;
  for (int j = 0; j < 3; ++j) {
    p.E[j] = y[j + 1].re;
    p.H[j] = y[j + 1].im;
    p.dE_dt[j] = d0[j + 1].re;
    p.dH_dt[j] = d0[j + 1].im;
    const auto dj = dY(x, j + 1);
    p.j_m[j] = dj[0].re;
    p.j_e[j] = -dj[0].im;
  }
  p.rho_m = -d0[0].re;
  p.rho_e = d0[0].im;
  return p;
}

namespace {

class ZeroScenario final : public Scenario {
 public:
  std::string name() const override { return "zero"; }
  bool has_field_form() const override { return true; }
  std::array<ComplexScalar, 4> Y(const std::array<double, 4>&) const override { return {}; }
  std::array<ComplexScalar, 4> dY(const std::array<double, 4>&, int) const override { return {}; }
};

// Vacuum wave running along x1: E = a cos(k(x1 - x0)) along x2,
// H the same profile along x3; no sources. The evolution axis spans two
// wavelengths so its spacing differs from the spatial one.
class PlaneWaveScenario final : public Scenario {
 public:
  explicit PlaneWaveScenario(const std::map<std::string, double>& params)
      : k_(get(params, "k", 1.0)), amp_(get(params, "amplitude", 1.0)) {
    reject_unknown(params, {"k", "amplitude"});
    if (k_ == 0.0) throw std::invalid_argument("plane-wave needs k != 0");
  }
  std::string name() const override { return "plane-wave"; }
  std::array<double, 2> domain(int axis) const override {
    return {0.0, axis == 0 ? 2.0 * kTwoPi : kTwoPi};
  }
  bool has_field_form() const override { return true; }
  std::array<ComplexScalar, 4> Y(const std::array<double, 4>& x) const override {
    const double v = amp_ * std::cos(k_ * (x[1] - x[0]));
    return {ComplexScalar{}, ComplexScalar{}, ComplexScalar{v, 0.0}, ComplexScalar{0.0, v}};
  }
  std::array<ComplexScalar, 4> dY(const std::array<double, 4>& x, int axis) const override {
    if (axis >= 2) return {};
    const double dv = -amp_ * k_ * std::sin(k_ * (x[1] - x[0])) * (axis == 0 ? -1.0 : 1.0);
    return {ComplexScalar{}, ComplexScalar{}, ComplexScalar{dv, 0.0}, ComplexScalar{0.0, dv}};
  }

 private:
  double k_, amp_;
};

// Static manufactured charge: E = grad(phi), rho_e = lap(phi) with
// phi = a sin x1 sin x2 sin x3; everything else zero.
class StaticElectricScenario final : public Scenario {
 public:
  explicit StaticElectricScenario(const std::map<std::string, double>& params)
      : amp_(get(params, "amplitude", 1.0)) {
    reject_unknown(params, {"amplitude"});
  }
  std::string name() const override { return "static-electric"; }
  AnalyticPoint state(const std::array<double, 3>& xs, double) const override {
    const double s1 = std::sin(xs[0]), c1 = std::cos(xs[0]);
    const double s2 = std::sin(xs[1]), c2 = std::cos(xs[1]);
    const double s3 = std::sin(xs[2]), c3 = std::cos(xs[2]);
    AnalyticPoint p;
    p.E = {amp_ * c1 * s2 * s3, amp_ * s1 * c2 * s3, amp_ * s1 * s2 * c3};
    p.rho_e = -3.0 * amp_ * s1 * s2 * s3;
    return p;
  }

 private:
  double amp_;
};

// Gaussian magnetic charge: H = grad(psi), rho_m = lap(psi) with
// psi = a exp(-r^2 / (2 sigma^2)) on a non-periodic box centred at 0.
class MonopoleGaussScenario final : public Scenario {
 public:
  explicit MonopoleGaussScenario(const std::map<std::string, double>& params)
      : amp_(get(params, "amplitude", 1.0)),
        sigma_(get(params, "sigma", 0.35)),
        extent_(get(params, "extent", 4.0)) {
    reject_unknown(params, {"amplitude", "sigma", "extent"});
    if (!(sigma_ > 0.0)) throw std::invalid_argument("monopole-gauss needs sigma > 0");
    if (!(extent_ > 0.0)) throw std::invalid_argument("monopole-gauss needs extent > 0");
  }
  std::string name() const override { return "monopole-gauss"; }
  Boundary boundary() const override { return Boundary::one_sided; }
  std::array<double, 2> domain(int axis) const override {
    (void)axis;
    return {-0.5 * extent_, extent_};
  }
  AnalyticPoint state(const std::array<double, 3>& xs, double) const override {
    const double r2 = xs[0] * xs[0] + xs[1] * xs[1] + xs[2] * xs[2];
    const double s2 = sigma_ * sigma_;
    const double g = amp_ * std::exp(-0.5 * r2 / s2);
    AnalyticPoint p;
    for (int j = 0; j < 3; ++j) p.H[j] = -xs[j] / s2 * g;
    p.rho_m = (r2 / (s2 * s2) - 3.0 / s2) * g;
    return p;
  }

 private:
  double amp_, sigma_, extent_;
};

// Source-only configuration derived from a potential component solving the
// wave equation: Y0 = a cos(x1 - x0) + e7 b sin(x2 - x0), Y_j = 0.
class WavePotentialScenario final : public Scenario {
 public:
  explicit WavePotentialScenario(const std::map<std::string, double>& params)
      : a_(get(params, "amp_re", 1.0)), b_(get(params, "amp_im", 0.75)) {
    reject_unknown(params, {"amp_re", "amp_im"});
  }
  std::string name() const override { return "wave-potential"; }
  bool has_field_form() const override { return true; }
  std::array<ComplexScalar, 4> Y(const std::array<double, 4>& x) const override {
    return {ComplexScalar{a_ * std::cos(x[1] - x[0]), b_ * std::sin(x[2] - x[0])},
            ComplexScalar{}, ComplexScalar{}, ComplexScalar{}};
  }
  std::array<ComplexScalar, 4> dY(const std::array<double, 4>& x, int axis) const override {
    const double sre = a_ * std::sin(x[1] - x[0]);
    const double cim = b_ * std::cos(x[2] - x[0]);
    ComplexScalar d0{};
    switch (axis) {
      case 0:
        d0 = {sre, -cim};
        break;
      case 1:
        d0 = {-sre, 0.0};
        break;
      case 2:
        d0 = {0.0, cim};
        break;
      default:
        d0 = {0.0, 0.0};
    }
    return {d0, ComplexScalar{}, ComplexScalar{}, ComplexScalar{}};
  }

 private:
  double a_, b_;
};

// Localised current pulse for the solver: a Gaussian blob in space and time
// feeding either the electric or the magnetic current, zero initial fields.
class CurrentPulseScenario final : public Scenario {
 public:
  explicit CurrentPulseScenario(const std::map<std::string, double>& params)
      : amp_(get(params, "amplitude", 1.0)),
        sigma_(get(params, "sigma", 0.8)),
        tau_(get(params, "tau", 0.5)),
        t0_(get(params, "t0", 1.0)),
        magnetic_(get(params, "magnetic", 1.0) != 0.0) {
    reject_unknown(params, {"amplitude", "sigma", "tau", "t0", "magnetic"});
    if (!(sigma_ > 0.0) || !(tau_ > 0.0)) throw std::invalid_argument("current-pulse needs sigma, tau > 0");
  }
  std::string name() const override { return "current-pulse"; }
  AnalyticPoint state(const std::array<double, 3>& xs, double x0) const override {
    const double cx = 0.5 * kTwoPi;
    const double r2 = (xs[0] - cx) * (xs[0] - cx) + (xs[1] - cx) * (xs[1] - cx) +
                      (xs[2] - cx) * (xs[2] - cx);
    const double g = amp_ * std::exp(-0.5 * r2 / (sigma_ * sigma_)) *
                     std::exp(-0.5 * (x0 - t0_) * (x0 - t0_) / (tau_ * tau_));
    AnalyticPoint p;
    if (magnetic_)
      p.j_m[2] = g;
    else
      p.j_e[2] = g;
    return p;
  }

 private:
  double amp_, sigma_, tau_, t0_;
  bool magnetic_;
};

}  // namespace

std::unique_ptr<Scenario> make_scenario(const std::string& name,
                                        const std::map<std::string, double>& params) {
  if (name == "zero") {
    reject_unknown(params, {});
    return std::make_unique<ZeroScenario>();
  }
  if (name == "plane-wave") return std::make_unique<PlaneWaveScenario>(params);
  if (name == "static-electric") return std::make_unique<StaticElectricScenario>(params);
  if (name == "monopole-gauss") return std::make_unique<MonopoleGaussScenario>(params);
  if (name == "wave-potential") return std::make_unique<WavePotentialScenario>(params);
  if (name == "current-pulse") return std::make_unique<CurrentPulseScenario>(params);
  throw std::invalid_argument("unknown scenario: " + name);
}

std::vector<std::string> scenario_names() {
  return {"zero", "plane-wave", "static-electric", "monopole-gauss", "wave-potential",
          "current-pulse"};
}

namespace {

double spacing(const Scenario& sc, int axis, int n) {
  const auto dom = sc.domain(axis);
  return sc.boundary() == Boundary::periodic ? dom[1] / n : dom[1] / (n - 1);
}

}  // namespace

Lattice4D scenario_lattice4(const Scenario& sc, const std::array<int, 4>& n) {
  std::array<double, 4> h, origin;
  for (int k = 0; k < 4; ++k) {
    h[k] = spacing(sc, k, n[k]);
    origin[k] = sc.domain(k)[0];
  }
  return Lattice4D(n, h, origin, sc.boundary());
}

Lattice3D scenario_lattice3(const Scenario& sc, const std::array<int, 3>& n) {
  std::array<double, 3> h, origin;
  for (int k = 0; k < 3; ++k) {
    h[k] = spacing(sc, k + 1, n[k]);
    origin[k] = sc.domain(k + 1)[0];
  }
  return Lattice3D(n, h, origin, sc.boundary());
}

FieldGrid4D sample_field(const Scenario& sc, const Lattice4D& lat) {
  if (!sc.has_field_form())
    throw std::invalid_argument("scenario '" + sc.name() + "' has no field form");
  return FieldGrid4D::sample(lat,
                             [&sc](const std::array<double, 4>& x) { return sc.Y(x); });
}

SampledState sample_state(const Scenario& sc, const Lattice3D& lat, double x0, double dt) {
  SampledState out;
  out.state = MaxwellState::zeros(lat, dt);
  const std::size_t N = lat.size();
  for (int k = 0; k < 3; ++k) {
    out.dE_dt[k].assign(N, 0.0);
    out.dH_dt[k].assign(N, 0.0);
  }
  std::size_t s = 0;
  for (int i0 = 0; i0 < lat.n[0]; ++i0)
    for (int i1 = 0; i1 < lat.n[1]; ++i1)
      for (int i2 = 0; i2 < lat.n[2]; ++i2, ++s) {
        const AnalyticPoint p = sc.state(lat.site(i0, i1, i2), x0);
        for (int k = 0; k < 3; ++k) {
          out.state.E[k][s] = p.E[k];
          out.state.H[k][s] = p.H[k];
          out.state.j_e[k][s] = p.j_e[k];
          out.state.j_m[k][s] = p.j_m[k];
          out.dE_dt[k][s] = p.dE_dt[k];
          out.dH_dt[k][s] = p.dH_dt[k];
        }
        out.state.rho_e[s] = p.rho_e;
        out.state.rho_m[s] = p.rho_m;
      }
  return out;
}

}  // namespace octomax

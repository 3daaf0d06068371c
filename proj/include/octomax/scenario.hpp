#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "octomax/field_calculus.hpp"
#include "octomax/maxwell.hpp"

namespace octomax {

// Pointwise analytic data of a scenario at a space-time point.
struct AnalyticPoint {
  std::array<double, 3> E{}, H{}, dE_dt{}, dH_dt{}, j_e{}, j_m{};
  double rho_e = 0.0, rho_m = 0.0;
};

// A named analytic configuration. Scenarios whose sources derive from a
// single potential component expose the 4D field form (Y and its exact
// partials); scenarios with free-standing sources provide only the
// state form.
class Scenario {
 public:
  virtual ~Scenario() = default;

  virtual std::string name() const = 0;
  virtual Boundary boundary() const { return Boundary::periodic; }
  // domain extent per axis (axis 0 = evolution axis): {origin, length}
  virtual std::array<double, 2> domain(int axis) const;

  virtual bool has_field_form() const { return false; }
  virtual std::array<ComplexScalar, 4> Y(const std::array<double, 4>& x) const;
  virtual std::array<ComplexScalar, 4> dY(const std::array<double, 4>& x, int axis) const;

  // Defaults to the field-form dictionary; overridden by state-only
  // scenarios.
  virtual AnalyticPoint state(const std::array<double, 3>& xs, double x0) const;
};

// Registered names: zero, plane-wave, static-electric, monopole-gauss,
// wave-potential, current-pulse. Unknown names or parameters throw.
std::unique_ptr<Scenario> make_scenario(const std::string& name,
                                        const std::map<std::string, double>& params = {});
std::vector<std::string> scenario_names();

// Lattices covering the scenario domain: n points per axis; periodic axes
// use h = L/n (endpoint excluded), one-sided axes h = L/(n-1).
Lattice4D scenario_lattice4(const Scenario& sc, const std::array<int, 4>& n);
Lattice3D scenario_lattice3(const Scenario& sc, const std::array<int, 3>& n);

FieldGrid4D sample_field(const Scenario& sc, const Lattice4D& lat);

// State plus the analytic field rates used by the residual evaluation.
struct SampledState {
  MaxwellState state;
  Vec3Field dE_dt, dH_dt;
};
SampledState sample_state(const Scenario& sc, const Lattice3D& lat, double x0, double dt = 0.0);

}  // namespace octomax

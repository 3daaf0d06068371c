#include "octomax/fdtd.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "octomax/report.hpp"

namespace octomax {

double SolverConfig::effective_cfl_limit() const {
  if (cfl_limit > 0.0) return cfl_limit;
  const double hmin = std::min({h[0], h[1], h[2]});
  return 0.5 * hmin / std::sqrt(3.0);
}

double SolverConfig::effective_dt() const { return dt > 0.0 ? dt : effective_cfl_limit(); }

void SolverConfig::validate() const {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  for (int k = 0; k < 3; ++k) {
    if (n[k] < 4) throw std::invalid_argument("solver lattice needs at least 4 points per axis");
    if (!(h[k] > 0.0)) throw std::invalid_argument("solver spacing must be positive");
  }
  if (diagnostics_every < 1) throw std::invalid_argument("diagnostics_every must be >= 1");
  if (snapshot_every < 0) throw std::invalid_argument("snapshot_every must be >= 0");
  const double limit = effective_cfl_limit();
  if (effective_dt() > limit * (1.0 + 1e-12)) {
    if (!allow_cfl_violation)
      throw std::invalid_argument("dt exceeds the CFL limit (set allow_cfl_violation to run anyway)");
    std::cerr << "warning: dt " << effective_dt() << " exceeds the CFL limit " << limit << "\n";
  }
}

namespace {

void require_periodic(const Lattice3D& lat) {
  if (lat.boundary != Boundary::periodic)
    throw std::invalid_argument("the solver runs on periodic lattices only");
}

struct FieldPair {
  Vec3Field E, H;
};

FieldPair zeros_like(const Lattice3D& lat) {
  FieldPair f;
  for (int k = 0; k < 3; ++k) {
    f.E[k].assign(lat.size(), 0.0);
    f.H[k].assign(lat.size(), 0.0);
  }
  return f;
}

// dE/dt = curl H - j_e, dH/dt = -curl E - j_m
FieldPair generator(const Lattice3D& lat, const Vec3Field& E, const Vec3Field& H,
                    const Vec3Field& j_e, const Vec3Field& j_m) {
  FieldPair k;
  k.E = curl(H, lat);
  k.H = curl(E, lat);
  const std::size_t N = lat.size();
  for (int c = 0; c < 3; ++c)
    for (std::size_t s = 0; s < N; ++s) {
      k.E[c][s] -= j_e[c][s];
      k.H[c][s] = -k.H[c][s] - j_m[c][s];
    }
  return k;
}

Vec3Field shifted(const Vec3Field& base, const Vec3Field& delta, double scale) {
  Vec3Field out;
  for (int c = 0; c < 3; ++c) {
    out[c].resize(base[c].size());
    for (std::size_t s = 0; s < base[c].size(); ++s) out[c][s] = base[c][s] + scale * delta[c][s];
  }
  return out;
}

}  // namespace

MaxwellState solver_step(const MaxwellState& s, double dt, double t, const SourceSampler* sampler) {
  require_periodic(s.lattice);
  const Lattice3D& lat = s.lattice;
  const std::size_t N = lat.size();

  Vec3Field je0 = s.j_e, jm0 = s.j_m;
  Vec3Field jeh = s.j_e, jmh = s.j_m;
  Vec3Field je1 = s.j_e, jm1 = s.j_m;
  if (sampler) {
    (*sampler)(t, je0, jm0);
    (*sampler)(t + 0.5 * dt, jeh, jmh);
    (*sampler)(t + dt, je1, jm1);
  }

  const FieldPair k1 = generator(lat, s.E, s.H, je0, jm0);
  const FieldPair k2 = generator(lat, shifted(s.E, k1.E, 0.5 * dt), shifted(s.H, k1.H, 0.5 * dt),
                                 jeh, jmh);
  const FieldPair k3 = generator(lat, shifted(s.E, k2.E, 0.5 * dt), shifted(s.H, k2.H, 0.5 * dt),
                                 jeh, jmh);
  const FieldPair k4 = generator(lat, shifted(s.E, k3.E, dt), shifted(s.H, k3.H, dt), je1, jm1);

  MaxwellState out = s;
  const double w = dt / 6.0;
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < N; ++i) {
      out.E[c][i] += w * (k1.E[c][i] + 2.0 * k2.E[c][i] + 2.0 * k3.E[c][i] + k4.E[c][i]);
      out.H[c][i] += w * (k1.H[c][i] + 2.0 * k2.H[c][i] + 2.0 * k3.H[c][i] + k4.H[c][i]);
    }

  // Charge continuity through the matching Simpson quadrature, so the Gauss
  // residuals are transported exactly (up to rounding).
  const auto div_e0 = divergence(je0, lat);
  const auto div_eh = divergence(jeh, lat);
  const auto div_e1 = divergence(je1, lat);
  const auto div_m0 = divergence(jm0, lat);
  const auto div_mh = divergence(jmh, lat);
  const auto div_m1 = divergence(jm1, lat);
  for (std::size_t i = 0; i < N; ++i) {
    out.rho_e[i] -= w * (div_e0[i] + 4.0 * div_eh[i] + div_e1[i]);
    out.rho_m[i] -= w * (div_m0[i] + 4.0 * div_mh[i] + div_m1[i]);
  }

  for (int c = 0; c < 3; ++c) {
    out.j_e[c] = je1[c];
    out.j_m[c] = jm1[c];
  }
  return out;
}

namespace {

double cell_volume(const Lattice3D& lat) { return lat.h[0] * lat.h[1] * lat.h[2]; }

double field_energy(const MaxwellState& s) {
  double acc = 0.0;
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < s.E[c].size(); ++i)
      acc += s.E[c][i] * s.E[c][i] + s.H[c][i] * s.H[c][i];
  return 0.5 * acc * cell_volume(s.lattice);
}

double gauss_residual_max(const std::vector<double>& div, const std::vector<double>& rho) {
  double worst = 0.0;
  for (std::size_t i = 0; i < div.size(); ++i)
    worst = std::max(worst, std::fabs(div[i] - rho[i]));
  return worst;
}

double state_max_diff(const MaxwellState& a, const MaxwellState& b) {
  double worst = 0.0;
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < a.E[c].size(); ++i) {
      worst = std::max(worst, std::fabs(a.E[c][i] - b.E[c][i]));
      worst = std::max(worst, std::fabs(a.H[c][i] - b.H[c][i]));
    }
  for (std::size_t i = 0; i < a.rho_e.size(); ++i) {
    worst = std::max(worst, std::fabs(a.rho_e[i] - b.rho_e[i]));
    worst = std::max(worst, std::fabs(a.rho_m[i] - b.rho_m[i]));
  }
  return worst;
}

void write_snapshot(const std::string& out_dir, int step, double time, const MaxwellState& s) {
  static_assert(std::endian::native == std::endian::little,
                "snapshot writer assumes a little-endian host");
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  char tag[32];
  std::snprintf(tag, sizeof tag, "snapshot_%06d", step);
  const char* names[6] = {"E1", "E2", "E3", "H1", "H2", "H3"};
  const std::vector<double>* planes[6] = {&s.E[0], &s.E[1], &s.E[2], &s.H[0], &s.H[1], &s.H[2]};
  JsonValue files = JsonValue::array();
  for (int c = 0; c < 6; ++c) {
    const std::string fname = std::string(tag) + "_" + names[c] + ".bin";
    std::ofstream out(fs::path(out_dir) / fname, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write snapshot file: " + fname);
    out.write(reinterpret_cast<const char*>(planes[c]->data()),
              static_cast<std::streamsize>(planes[c]->size() * sizeof(double)));
    files.push(JsonValue::string(fname));
  }
  JsonValue side = JsonValue::object();
  side.set("step", JsonValue::integer(step));
  side.set("time", JsonValue::number(time));
  JsonValue dims = JsonValue::array(), spacing = JsonValue::array(), origin = JsonValue::array();
  for (int k = 0; k < 3; ++k) {
    dims.push(JsonValue::integer(s.lattice.n[k]));
    spacing.push(JsonValue::number(s.lattice.h[k]));
    origin.push(JsonValue::number(s.lattice.origin[k]));
  }
  side.set("dims", std::move(dims));
  side.set("spacing", std::move(spacing));
  side.set("origin", std::move(origin));
  JsonValue order = JsonValue::array();
  for (const char* n : names) order.push(JsonValue::string(n));
  side.set("component_order", std::move(order));
  side.set("dtype", JsonValue::string("float64"));
  side.set("endianness", JsonValue::string("little"));
  side.set("files", std::move(files));
  std::ofstream js(fs::path(out_dir) / (std::string(tag) + ".json"));
  js << side.dump(2) << "\n";
}

}  // namespace

RunResult run_solver(const SolverConfig& cfg_in, const std::string& out_dir) {
  SolverConfig cfg = cfg_in;
  const auto scenario = make_scenario(cfg.scenario, cfg.scenario_params);
  if (scenario->boundary() != Boundary::periodic)
    throw std::invalid_argument("the solver needs a scenario with a periodic domain");
  for (int k = 0; k < 3; ++k)
    if (!(cfg.h[k] > 0.0)) cfg.h[k] = scenario->domain(k + 1)[1] / cfg.n[k];
  cfg.validate();
  const double dt = cfg.effective_dt();
  if (cfg.snapshot_every > 0 && out_dir.empty())
    throw std::invalid_argument("snapshots requested but no output directory given");

  std::array<double, 3> origin;
  for (int k = 0; k < 3; ++k) origin[k] = scenario->domain(k + 1)[0];
  const Lattice3D lat(cfg.n, cfg.h, origin, Boundary::periodic);
  const std::size_t N = lat.size();

  auto sample_sources = [&](double t, Vec3Field& j_e, Vec3Field& j_m) {
    std::size_t s = 0;
    for (int i0 = 0; i0 < lat.n[0]; ++i0)
      for (int i1 = 0; i1 < lat.n[1]; ++i1)
        for (int i2 = 0; i2 < lat.n[2]; ++i2, ++s) {
          const AnalyticPoint p = scenario->state(lat.site(i0, i1, i2), t);
          for (int c = 0; c < 3; ++c) {
            j_e[c][s] = p.j_e[c];
            j_m[c][s] = p.j_m[c];
          }
        }
  };
  SourceSampler sampler = sample_sources;

  MaxwellState state = MaxwellState::zeros(lat, dt);
  {
    std::size_t s = 0;
    for (int i0 = 0; i0 < lat.n[0]; ++i0)
      for (int i1 = 0; i1 < lat.n[1]; ++i1)
        for (int i2 = 0; i2 < lat.n[2]; ++i2, ++s) {
          const AnalyticPoint p = scenario->state(lat.site(i0, i1, i2), 0.0);
          for (int c = 0; c < 3; ++c) {
            state.E[c][s] = p.E[c];
            state.H[c][s] = p.H[c];
            state.j_e[c][s] = p.j_e[c];
            state.j_m[c][s] = p.j_m[c];
          }
          state.rho_e[s] = p.rho_e;
          state.rho_m[s] = p.rho_m;
        }
  }

  RunResult result;
  auto emit = [&](int step, double time, double work, double drift) {
    DiagnosticsRow row;
    row.step = step;
    row.time = time;
    row.energy = field_energy(state);
    row.source_work = work;
    row.div_e = gauss_residual_max(divergence(state.E, lat), state.rho_e);
    row.div_h = gauss_residual_max(divergence(state.H, lat), state.rho_m);
    row.duality_drift = drift;
    result.rows.push_back(row);
  };
  emit(0, 0.0, 0.0, 0.0);
  if (cfg.snapshot_every > 0) write_snapshot(out_dir, 0, 0.0, state);

  Vec3Field jeh, jmh;
  for (int c = 0; c < 3; ++c) {
    jeh[c].assign(N, 0.0);
    jmh[c].assign(N, 0.0);
  }

  for (int m = 0; m < cfg.steps; ++m) {
    const double t = m * dt;
    const int done = m + 1;
    const bool diag = done % cfg.diagnostics_every == 0 || done == cfg.steps;

    const MaxwellState prev = state;
    state = solver_step(prev, dt, t, &sampler);

    if (diag) {
      // midpoint work rate
      sample_sources(t + 0.5 * dt, jeh, jmh);
      double work = 0.0;
      for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < N; ++i)
          work += jeh[c][i] * 0.5 * (prev.E[c][i] + state.E[c][i]) +
                  jmh[c][i] * 0.5 * (prev.H[c][i] + state.H[c][i]);
      work *= cell_volume(lat);

      // rotation-equivariance drift probe
      const DualityAngle theta{cfg.duality_theta};
      const double cth = std::cos(theta.radians), sth = std::sin(theta.radians);
      SourceSampler rotated = [&](double tt, Vec3Field& j_e, Vec3Field& j_m) {
        sample_sources(tt, j_e, j_m);
        for (int c = 0; c < 3; ++c)
          for (std::size_t i = 0; i < N; ++i) {
            const double je = j_e[c][i], jm = j_m[c][i];
            j_e[c][i] = cth * je - sth * jm;
            j_m[c][i] = sth * je + cth * jm;
          }
      };
      const MaxwellState stepped_rotated = solver_step(duality_rotate(prev, theta), dt, t, &rotated);
      const double drift = state_max_diff(stepped_rotated, duality_rotate(state, theta));

      emit(done, done * dt, work, drift);
    }
    if (cfg.snapshot_every > 0 && done % cfg.snapshot_every == 0)
      write_snapshot(out_dir, done, done * dt, state);
  }

  result.final_state = std::move(state);
  return result;
}

std::string diagnostics_csv(const std::vector<DiagnosticsRow>& rows) {
  std::string out = "step,time,energy,source_work,div_e,div_h,duality_drift\n";
  for (const auto& r : rows) {
    out += std::to_string(r.step);
    for (double v : {r.time, r.energy, r.source_work, r.div_e, r.div_h, r.duality_drift}) {
      out += ',';
      out += format_g17(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace octomax

#include "jcxy/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jcxy {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

PhiGrid PhiGrid::uniform(int count) {
  if (count < 2) throw std::invalid_argument("phi grid needs at least 2 points");
  PhiGrid grid;
  grid.phi_.resize(count);
  const double step = std::numbers::pi / (count - 1);
  for (int i = 0; i < count; ++i) grid.phi_[i] = -kHalfPi + step * i;
  grid.phi_.front() = -kHalfPi;
  grid.phi_.back() = kHalfPi;
  if (count % 2 == 1) grid.phi_[count / 2] = 0.0;
  return grid;
}

PhiGrid PhiGrid::from_list(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("phi grid is empty");
  for (double v : values) {
    if (!std::isfinite(v) || v < -kHalfPi || v > kHalfPi) {
      throw std::invalid_argument("phi values must lie in [-pi/2, pi/2]");
    }
  }
  values.push_back(-kHalfPi);
  values.push_back(kHalfPi);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  PhiGrid grid;
  grid.phi_ = std::move(values);
  return grid;
}

Couplings couplings_at(double phi) {
  if (phi == 0.0) return {1.0, 0.0};
  if (phi == kHalfPi) return {0.0, 1.0};
  if (phi == -kHalfPi) return {0.0, -1.0};
  return {std::cos(phi), std::sin(phi)};
}

void validate_sector_filter(int n_sites, HalfInt abs_total_mz) {
  const int twice = abs_total_mz.twice();
  if (twice < 0 || twice > n_sites + 1 || (twice - (n_sites + 1)) % 2 != 0) {
    throw std::invalid_argument("|total M_z| = " + abs_total_mz.to_string() +
                                " is not an Inv sector for N=" + std::to_string(n_sites));
  }
}

namespace {

Spectrum solve_point(const SectorSolver& solver, double phi, const std::optional<HalfInt>& filter) {
  const Couplings c = couplings_at(phi);
  return filter ? solver.spectrum_filtered(c.g, c.j, *filter) : solver.spectrum(c.g, c.j);
}

SweepResult make_result(const SectorSolver& solver, const PhiGrid& grid,
                        const std::optional<HalfInt>& filter) {
  if (filter) validate_sector_filter(solver.n_sites(), *filter);
  SweepResult out{grid, std::vector<Spectrum>(grid.size()), {}};
  out.metadata.n_sites = solver.n_sites();
  out.metadata.topology = solver.generators().topology;
  out.metadata.jc_site = solver.generators().jc_site;
  out.metadata.sector_filter = filter;
  return out;
}

}  // namespace

SweepResult sweep_serial(const SectorSolver& solver, const PhiGrid& grid,
                         std::optional<HalfInt> abs_total_mz) {
  SweepResult out = make_result(solver, grid, abs_total_mz);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.spectra[i] = solve_point(solver, grid.values()[i], abs_total_mz);
  }
  return out;
}

SweepResult sweep(const SectorSolver& solver, const PhiGrid& grid, int workers,
                  std::optional<HalfInt> abs_total_mz) {
  if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
  SweepResult out = make_result(solver, grid, abs_total_mz);
  const auto& phi = grid.values();
  const long n = static_cast<long>(phi.size());
  bool failed = false;
  std::string message;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out.spectra[i] = solve_point(solver, phi[i], abs_total_mz);
    } catch (const std::exception& e) {
#pragma omp critical(jcxy_sweep_error)
      {
        failed = true;
        message = e.what();
      }
    }
  }
  if (failed) throw std::runtime_error(message);
  return out;
}

SweepResult sector_sweep(const SectorSolver& solver, const PhiGrid& grid, HalfInt abs_total_mz,
                         int workers) {
  return sweep(solver, grid, workers, abs_total_mz);
}

namespace {

double top_at(const SectorSolver& solver, double phi) {
  const Couplings c = couplings_at(phi);
  return solver.top_eigenvalue(c.g, c.j);
}

struct Candidate {
  double phi;
  double value;
};

// Golden-section maximization of the top eigenvalue on [a, b]; endpoints are compared too.
Candidate refine(const SectorSolver& solver, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = top_at(solver, x1);
  double f2 = top_at(solver, x2);
  while (b - a > tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = top_at(solver, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = top_at(solver, x2);
    }
  }
  Candidate best = f1 >= f2 ? Candidate{x1, f1} : Candidate{x2, f2};
  for (double edge : {a, b}) {
    const double f = top_at(solver, edge);
    if (f >= best.value) best = {edge, f};
  }
  return best;
}

}  // namespace

MaxReport find_max(const SectorSolver& solver, const MaxSearchOptions& options) {
  if (options.workers < 1) throw std::invalid_argument("worker count must be at least 1");
  const PhiGrid grid = PhiGrid::uniform(options.coarse_points);
  const auto& phi = grid.values();
  const long n = static_cast<long>(phi.size());
  std::vector<double> top(n);
#pragma omp parallel for num_threads(options.workers) schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) top[i] = top_at(solver, phi[i]);

  const auto [min_it, max_it] = std::minmax_element(top.begin(), top.end());
  MaxReport report;
  if (*max_it - *min_it < options.flat_tolerance) {
    report.is_flat = true;
    report.e_max = *max_it;
    const auto closest = std::min_element(phi.begin(), phi.end(),
                                          [](double x, double y) { return std::abs(x) < std::abs(y); });
    report.phi_max = *closest;
    return report;
  }

  // Every coarse local maximum close to the best one is refined; symmetric twins both survive.
  const double best = *max_it;
  const double slack = 1e-6 * std::max(1.0, std::abs(best));
  std::vector<Candidate> refined;
  for (long i = 0; i < n; ++i) {
    const bool local = (i == 0 || top[i] >= top[i - 1]) && (i == n - 1 || top[i] >= top[i + 1]);
    if (!local || top[i] < best - slack) continue;
    const double a = phi[std::max(0L, i - 1)];
    const double b = phi[std::min(n - 1, i + 1)];
    Candidate c = refine(solver, a, b, options.phi_tolerance);
    if (top[i] >= c.value) c = {phi[i], top[i]};
    refined.push_back(c);
  }

  const double e_max = std::max_element(refined.begin(), refined.end(), [](const Candidate& x, const Candidate& y) {
                         return x.value < y.value;
                       })->value;
  const double tie = options.flat_tolerance * std::max(1.0, std::abs(e_max));
  double phi_max = HUGE_VAL;
  for (const auto& c : refined) {
    if (c.value >= e_max - tie) phi_max = std::min(phi_max, c.phi);
  }
  report.e_max = e_max;
  report.phi_max = phi_max;
  return report;
}

std::string to_string(SymmetryStatus s) {
  switch (s) {
    case SymmetryStatus::Held:
      return "held";
    case SymmetryStatus::Broken:
      return "broken";
    case SymmetryStatus::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

SymmetryStatus classify_symmetry(double distance) {
  if (distance < kSymmetryHeld) return SymmetryStatus::Held;
  if (distance > kSymmetryBroken) return SymmetryStatus::Broken;
  return SymmetryStatus::Inconclusive;
}

double max_elementwise_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("spectra differ in length");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

namespace {

SymmetryStatus combine(SymmetryStatus acc, SymmetryStatus next) {
  if (acc == SymmetryStatus::Broken || next == SymmetryStatus::Broken) return SymmetryStatus::Broken;
  if (acc == SymmetryStatus::Inconclusive || next == SymmetryStatus::Inconclusive) {
    return SymmetryStatus::Inconclusive;
  }
  return SymmetryStatus::Held;
}

}  // namespace

SymmetryReport symmetry_report(const SectorSolver& solver, const std::vector<double>& probe_phis) {
  SymmetryReport report;
  for (double phi : probe_phis) {
    if (!(std::abs(phi) > 1e-6) || !(std::abs(std::abs(phi) - kHalfPi) > 1e-6) ||
        std::abs(phi) > kHalfPi) {
      throw std::invalid_argument("symmetry probes must avoid 0 and +-pi/2");
    }
    const Couplings c = couplings_at(phi);
    const auto base = solver.spectrum(c.g, c.j).energies;
    SymmetryProbe probe{};
    probe.phi = phi;
    probe.j_sign_distance = max_elementwise_distance(base, solver.spectrum(c.g, -c.j).energies);
    probe.g_sign_distance = max_elementwise_distance(base, solver.spectrum(-c.g, c.j).energies);
    probe.j_sign = classify_symmetry(probe.j_sign_distance);
    probe.g_sign = classify_symmetry(probe.g_sign_distance);
    report.j_sign = combine(report.j_sign, probe.j_sign);
    report.g_sign = combine(report.g_sign, probe.g_sign);
    report.probes.push_back(probe);
  }
  return report;
}

}  // namespace jcxy

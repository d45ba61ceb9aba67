#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jcxy/eigensolve.hpp"

namespace jcxy {

/// Strictly increasing phi values in [-pi/2, pi/2], endpoints always present.
class PhiGrid {
 public:
  /// `count` >= 2 uniform points, spacing pi / (count - 1).
  static PhiGrid uniform(int count);
  /// Sorted, deduplicated values; the endpoints are added if missing.
  static PhiGrid from_list(std::vector<double> values);

  const std::vector<double>& values() const { return phi_; }
  std::size_t size() const { return phi_.size(); }

 private:
  std::vector<double> phi_;
};

inline constexpr int kDefaultGridPoints = 721;

struct Couplings {
  double g;
  double j;
};
/// (cos phi, sin phi), exact at 0 and +-pi/2.
Couplings couplings_at(double phi);

struct SweepMetadata {
  int n_sites = 0;
  Topology topology = Topology::OpenNN;
  int jc_site = 1;
  double tolerance = 1e-8;
  std::optional<HalfInt> sector_filter;  ///< |total M_z| if restricted
};

struct SweepResult {
  PhiGrid grid;
  std::vector<Spectrum> spectra;  ///< spectra[i] belongs to grid.values()[i]; E = lambda on the unit circle
  SweepMetadata metadata;
};

/// Reference implementation: one phi point after another.
SweepResult sweep_serial(const SectorSolver& solver, const PhiGrid& grid,
                         std::optional<HalfInt> abs_total_mz = std::nullopt);

/// OpenMP over phi points; output is identical to sweep_serial for any worker count.
SweepResult sweep(const SectorSolver& solver, const PhiGrid& grid, int workers,
                  std::optional<HalfInt> abs_total_mz = std::nullopt);

/// Throws std::invalid_argument unless |total M_z| = abs_total_mz exists for N sites.
void validate_sector_filter(int n_sites, HalfInt abs_total_mz);

SweepResult sector_sweep(const SectorSolver& solver, const PhiGrid& grid, HalfInt abs_total_mz,
                         int workers = 1);

struct MaxReport {
  double e_max = 0.0;
  double phi_max = 0.0;
  bool is_flat = false;
};

struct MaxSearchOptions {
  int coarse_points = 2001;      ///< spacing pi/2000
  double phi_tolerance = 1e-7;   ///< golden-section bracket width
  double flat_tolerance = 1e-9;
  int workers = 1;
};

MaxReport find_max(const SectorSolver& solver, const MaxSearchOptions& options = {});

enum class SymmetryStatus { Held, Broken, Inconclusive };
std::string to_string(SymmetryStatus s);

inline constexpr double kSymmetryHeld = 1e-9;
inline constexpr double kSymmetryBroken = 1e-3;

SymmetryStatus classify_symmetry(double distance);

struct SymmetryProbe {
  double phi;
  double j_sign_distance;  ///< spectra at (G, J) vs (G, -J)
  double g_sign_distance;  ///< spectra at (G, J) vs (-G, J)
  SymmetryStatus j_sign;
  SymmetryStatus g_sign;
};

struct SymmetryReport {
  std::vector<SymmetryProbe> probes;
  SymmetryStatus j_sign = SymmetryStatus::Held;  ///< combined over probes
  SymmetryStatus g_sign = SymmetryStatus::Held;
};

/// Probe angles must avoid 0 and +-pi/2.
SymmetryReport symmetry_report(const SectorSolver& solver, const std::vector<double>& probe_phis);

/// max_i |a_i - b_i| of two sorted spectra of equal length.
double max_elementwise_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace jcxy

#pragma once

#include <stdexcept>
#include <vector>

#include "jcxy/basis.hpp"
#include "jcxy/dense.hpp"
#include "jcxy/hamiltonian.hpp"
#include "jcxy/sectors.hpp"

namespace jcxy {

class SolverError : public std::runtime_error {
 public:
  SolverError(int block_size, double residual);
  int block_size() const { return block_size_; }
  double residual() const { return residual_; }

 private:
  int block_size_;
  double residual_;
};

/// Ascending eigenvalues of a real symmetric matrix (Householder tridiagonalization,
/// implicit-shift QL). Throws std::invalid_argument if |A - A^T| exceeds 1e-12.
std::vector<double> eigvals_symmetric(const DenseMatrix& a);

struct Eigensystem {
  std::vector<double> values;  ///< ascending
  DenseMatrix vectors;         ///< column c is the eigenvector of values[c]
};
Eigensystem eigh_symmetric(const DenseMatrix& a);

/// Largest eigenvalue only: tridiagonalization followed by Sturm bisection.
double largest_eigenvalue(const DenseMatrix& a);

struct Spectrum {
  std::vector<double> energies;      ///< nondecreasing
  std::vector<HalfInt> sector_mz;    ///< total M_z of the sector each energy came from

  std::size_t size() const { return energies.size(); }
  HalfInt inv_label(std::size_t i) const { return sector_mz[i] + HalfInt::from_twice(1); }
};

/// Per-sector dense blocks of h_g and h_j, extracted once; H(G,J) blocks are G*BG + J*BJ.
class SectorSolver {
 public:
  explicit SectorSolver(GeneratorPair pair);

  const GeneratorPair& generators() const { return pair_; }
  const std::vector<Sector>& sectors() const { return sectors_; }
  int n_sites() const { return pair_.n_sites; }

  DenseMatrix block(std::size_t sector, double g, double j) const;
  std::vector<double> sector_eigenvalues(std::size_t sector, double g, double j) const;

  /// All 2^(N+1) eigenvalues, merged in (energy, sector) order.
  Spectrum spectrum(double g, double j) const;
  /// Spectrum restricted to sectors with |total M_z| == abs_total_mz.
  Spectrum spectrum_filtered(double g, double j, HalfInt abs_total_mz) const;

  /// Largest eigenvalue of H(G,J). Sectors with total M_z < 0 are skipped: the global
  /// spin flip maps sector m onto -m and leaves H unchanged.
  double top_eigenvalue(double g, double j) const;

 private:
  GeneratorPair pair_;
  std::vector<Sector> sectors_;
  std::vector<DenseMatrix> jc_blocks_;
  std::vector<DenseMatrix> xy_blocks_;
};

/// Serial over sectors.
Spectrum full_spectrum(const GeneratorPair& pair, double g, double j);

struct Level {
  double value;
  int multiplicity;
};

struct DegeneracySummary {
  int distinct_count = 0;
  std::vector<Level> levels;
};

/// Single-linkage grouping of the sorted energies: neighbours closer than tol share a level.
DegeneracySummary degeneracy_summary(const Spectrum& spec, double tol = 1e-8);
DegeneracySummary degeneracy_summary(const std::vector<double>& sorted_energies, double tol = 1e-8);

}  // namespace jcxy

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "jcxy/dense.hpp"
#include "jcxy/geometry.hpp"

namespace jcxy {

struct MatrixEntry {
  std::uint32_t row;  ///< row <= col
  std::uint32_t col;
  double value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Real symmetric sparse matrix holding the upper triangle, sorted by (row, col), no zeros.
class SparseSymmetric {
 public:
  SparseSymmetric() = default;
  /// Entries may come in any order and either triangle; duplicates are summed and zeros dropped.
  SparseSymmetric(std::uint32_t dim, std::vector<MatrixEntry> entries);

  std::uint32_t dim() const { return dim_; }
  std::span<const MatrixEntry> entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }

  double trace() const;
  /// y = H x
  std::vector<double> apply(std::span<const double> x) const;
  DenseMatrix to_dense() const;

  friend bool operator==(const SparseSymmetric&, const SparseSymmetric&) = default;

 private:
  std::uint32_t dim_ = 0;
  std::vector<MatrixEntry> entries_;
};

/// a + scale * b
SparseSymmetric add_scaled(const SparseSymmetric& a, const SparseSymmetric& b, double scale);

/// Photon/site-k flip-flop: couples (photon 1, site k down) with (photon 0, site k up).
SparseSymmetric build_jc_generator(int n_sites, int jc_site);

/// -sum_bonds 2 w (SxSx + SySy) per unordered bond: element -w between exchanged states.
SparseSymmetric build_xy_generator(const CouplingMap& map);

/// The JC term from literal truncated a, a-dagger and S+-, built in photon-major Fock
/// ordering and permuted into the basis encoding. Independent of build_jc_generator.
SparseSymmetric build_photon_explicit(int n_sites, int jc_site);

struct GeneratorPair {
  SparseSymmetric h_g;
  SparseSymmetric h_j;
  int n_sites = 0;
  int jc_site = 1;
  Topology topology = Topology::OpenNN;
};

GeneratorPair make_generators(int n_sites, Topology topology, int jc_site = 1);

/// G h_g + J h_j
SparseSymmetric assemble(const GeneratorPair& pair, double g, double j);

/// Coordinate dump: MatrixMarket header, then "row col value" (1-based, lower triangle).
void write_coordinate(std::ostream& os, const SparseSymmetric& h);

}  // namespace jcxy

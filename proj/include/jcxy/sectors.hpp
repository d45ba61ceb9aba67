#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "jcxy/basis.hpp"
#include "jcxy/dense.hpp"
#include "jcxy/hamiltonian.hpp"

namespace jcxy {

/// Eigenspace of the conserved Inv = n_ph + M_z = 1/2 + total M_z.
struct Sector {
  HalfInt inv_value;
  HalfInt total_mz;
  std::vector<std::uint32_t> members;  ///< ascending basis codes

  int dim() const { return static_cast<int>(members.size()); }
};

/// A nonzero of H joins two different Inv sectors.
class SectorStraddleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// N+2 sectors ordered by total_mz from -(N+1)/2 up to (N+1)/2.
std::vector<Sector> decompose(int n_sites);

/// Position of every basis code inside its sector.
struct SectorIndex {
  std::vector<int> sector_of;  ///< index into decompose() order
  std::vector<int> local_of;
};
SectorIndex index_sectors(const std::vector<Sector>& sectors, std::uint32_t dim);

/// <members[a]|H|members[b]>; throws SectorStraddleError if any entry of h couples two sectors.
DenseMatrix extract_block(const SparseSymmetric& h, const Sector& sector);

/// max |(inv(row) - inv(col)) H[row][col]| over stored entries.
double verify_commutation(const SparseSymmetric& h, int n_sites);

}  // namespace jcxy

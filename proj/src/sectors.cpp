#include "jcxy/sectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace jcxy {

std::vector<Sector> decompose(int n_sites) {
  validate_n_sites(n_sites);
  const std::uint32_t dim = basis_dimension(n_sites);
  std::vector<Sector> sectors;
  sectors.reserve(n_sites + 2);
  for (int twice = -(n_sites + 1); twice <= n_sites + 1; twice += 2) {
    Sector s;
    s.total_mz = HalfInt::from_twice(twice);
    s.inv_value = s.total_mz + HalfInt::from_twice(1);
    sectors.push_back(std::move(s));
  }
  for (std::uint32_t code = 0; code < dim; ++code) {
    const int twice = twice_total_mz(code, n_sites);
    sectors[(twice + n_sites + 1) / 2].members.push_back(code);
  }
  return sectors;
}

SectorIndex index_sectors(const std::vector<Sector>& sectors, std::uint32_t dim) {
  SectorIndex idx{std::vector<int>(dim, -1), std::vector<int>(dim, -1)};
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    for (int a = 0; a < sectors[s].dim(); ++a) {
      idx.sector_of[sectors[s].members[a]] = static_cast<int>(s);
      idx.local_of[sectors[s].members[a]] = a;
    }
  }
  return idx;
}

DenseMatrix extract_block(const SparseSymmetric& h, const Sector& sector) {
  const int n_bits = std::bit_width(h.dim()) - 1;  // N + 1
  const int twice = sector.total_mz.twice();
  for (const auto& e : h.entries()) {
    if (std::popcount(e.row) != std::popcount(e.col)) {
      throw SectorStraddleError("matrix entry (" + std::to_string(e.row) + ", " +
                                std::to_string(e.col) + ") couples different Inv sectors");
    }
  }
  if (sector.dim() > 0 && std::abs(twice) > n_bits) {
    throw std::invalid_argument("sector does not belong to this matrix dimension");
  }

  DenseMatrix block(sector.dim());
  const auto& m = sector.members;
  auto local = [&](std::uint32_t code) {
    auto it = std::lower_bound(m.begin(), m.end(), code);
    return (it != m.end() && *it == code) ? static_cast<int>(it - m.begin()) : -1;
  };
  for (const auto& e : h.entries()) {
    const int a = local(e.row);
    if (a < 0) continue;
    const int b = local(e.col);
    block(a, b) = e.value;
    block(b, a) = e.value;
  }
  return block;
}

double verify_commutation(const SparseSymmetric& h, int n_sites) {
  validate_n_sites(n_sites);
  double worst = 0.0;
  for (const auto& e : h.entries()) {
    const double d_inv = 0.5 * (twice_total_mz(e.row, n_sites) - twice_total_mz(e.col, n_sites));
    worst = std::max(worst, std::abs(d_inv * e.value));
  }
  return worst;
}

}  // namespace jcxy

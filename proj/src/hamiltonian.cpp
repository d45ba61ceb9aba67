#include "jcxy/hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "jcxy/basis.hpp"

namespace jcxy {

SparseSymmetric::SparseSymmetric(std::uint32_t dim, std::vector<MatrixEntry> entries) : dim_(dim) {
  for (auto& e : entries) {
    if (e.row >= dim || e.col >= dim) throw std::invalid_argument("matrix entry outside dimension");
    if (!std::isfinite(e.value)) throw std::invalid_argument("non-finite matrix entry");
    if (e.row > e.col) std::swap(e.row, e.col);
  }
  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  entries_.reserve(entries.size());
  for (const auto& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const MatrixEntry& e) { return e.value == 0.0; });
}

double SparseSymmetric::trace() const {
  double t = 0.0;
  for (const auto& e : entries_) {
    if (e.row == e.col) t += e.value;
  }
  return t;
}

std::vector<double> SparseSymmetric::apply(std::span<const double> x) const {
  if (x.size() != dim_) throw std::invalid_argument("vector length does not match matrix dimension");
  std::vector<double> y(dim_, 0.0);
  for (const auto& e : entries_) {
    y[e.row] += e.value * x[e.col];
    if (e.row != e.col) y[e.col] += e.value * x[e.row];
  }
  return y;
}

DenseMatrix SparseSymmetric::to_dense() const {
  DenseMatrix m(static_cast<int>(dim_));
  for (const auto& e : entries_) {
    m(e.row, e.col) = e.value;
    m(e.col, e.row) = e.value;
  }
  return m;
}

SparseSymmetric add_scaled(const SparseSymmetric& a, const SparseSymmetric& b, double scale) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in add_scaled");
  std::vector<MatrixEntry> merged(a.entries().begin(), a.entries().end());
  merged.reserve(a.nonzeros() + b.nonzeros());
  for (auto e : b.entries()) {
    e.value *= scale;
    merged.push_back(e);
  }
  return SparseSymmetric(a.dim(), std::move(merged));
}

namespace {

void check_jc_site(int n_sites, int jc_site) {
  validate_n_sites(n_sites);
  if (jc_site < 1 || jc_site > n_sites) {
    throw std::invalid_argument("JC site must be in [1, " + std::to_string(n_sites) + "], got " +
                                std::to_string(jc_site));
  }
}

}  // namespace

SparseSymmetric build_jc_generator(int n_sites, int jc_site) {
  check_jc_site(n_sites, jc_site);
  const std::uint32_t dim = basis_dimension(n_sites);
  const std::uint32_t site_bit = 1u << jc_site;
  std::vector<MatrixEntry> entries;
  entries.reserve(dim / 4);
  for (std::uint32_t s = 0; s < dim; ++s) {
    if ((s & 1u) && !(s & site_bit)) {
      entries.push_back({s, s ^ 1u ^ site_bit, 1.0});
    }
  }
  return SparseSymmetric(dim, std::move(entries));
}

SparseSymmetric build_xy_generator(const CouplingMap& map) {
  validate_n_sites(map.n_sites);
  const std::uint32_t dim = basis_dimension(map.n_sites);
  std::vector<MatrixEntry> entries;
  for (const auto& bond : map.bonds) {
    if (bond.i < 1 || bond.j > map.n_sites || bond.i >= bond.j || !(bond.w > 0.0)) {
      throw std::invalid_argument("invalid bond in coupling map");
    }
    const std::uint32_t bi = 1u << bond.i;
    const std::uint32_t bj = 1u << bond.j;
    for (std::uint32_t s = 0; s < dim; ++s) {
      if ((s & bi) && !(s & bj)) entries.push_back({s, s ^ bi ^ bj, -bond.w});
    }
  }
  return SparseSymmetric(dim, std::move(entries));
}

SparseSymmetric build_photon_explicit(int n_sites, int jc_site) {
  check_jc_site(n_sites, jc_site);
  const std::uint32_t spin_dim = 1u << n_sites;

  // Product ket |n_ph> (x) |sigma_1 ... sigma_N>, photon-major index n_ph * 2^N + spins,
  // spins stored with site i at bit i-1 (1 = up).
  struct Ket {
    int n_ph;
    std::uint32_t spins;
    double amp;
  };
  auto lower = [](Ket k) {  // a, one-photon truncation: a|1> = |0>, a|0> = 0
    if (k.n_ph == 0) return Ket{0, 0, 0.0};
    return Ket{k.n_ph - 1, k.spins, k.amp * std::sqrt(static_cast<double>(k.n_ph))};
  };
  auto raise = [](Ket k) {  // a-dagger, truncated: a+|0> = |1>, a+|1> = 0
    if (k.n_ph == 1) return Ket{0, 0, 0.0};
    return Ket{k.n_ph + 1, k.spins, k.amp * std::sqrt(static_cast<double>(k.n_ph + 1))};
  };
  const std::uint32_t site_mask = 1u << (jc_site - 1);
  auto spin_plus = [&](Ket k) {
    if (k.amp == 0.0 || (k.spins & site_mask)) return Ket{0, 0, 0.0};
    return Ket{k.n_ph, k.spins | site_mask, k.amp};
  };
  auto spin_minus = [&](Ket k) {
    if (k.amp == 0.0 || !(k.spins & site_mask)) return Ket{0, 0, 0.0};
    return Ket{k.n_ph, k.spins & ~site_mask, k.amp};
  };

  std::map<std::pair<std::uint32_t, std::uint32_t>, double> fock;
  for (int n_ph = 0; n_ph <= 1; ++n_ph) {
    for (std::uint32_t spins = 0; spins < spin_dim; ++spins) {
      const Ket ket{n_ph, spins, 1.0};
      const std::uint32_t col = static_cast<std::uint32_t>(n_ph) * spin_dim + spins;
      for (const Ket out : {spin_plus(lower(ket)), spin_minus(raise(ket))}) {
        if (out.amp == 0.0) continue;
        const std::uint32_t row = static_cast<std::uint32_t>(out.n_ph) * spin_dim + out.spins;
        fock[{row, col}] += out.amp;
      }
    }
  }

  auto to_code = [&](std::uint32_t fock_index) {
    const int n_ph = static_cast<int>(fock_index / spin_dim);
    const std::uint32_t spins = fock_index % spin_dim;
    std::vector<Spin> config(n_sites);
    for (int i = 0; i < n_sites; ++i) config[i] = (spins >> i) & 1u ? Spin::Up : Spin::Down;
    return encode(n_ph, config).code();
  };

  std::vector<MatrixEntry> entries;
  for (const auto& [rc, value] : fock) {
    const std::uint32_t r = to_code(rc.first);
    const std::uint32_t c = to_code(rc.second);
    if (r <= c) entries.push_back({r, c, value});
  }
  return SparseSymmetric(basis_dimension(n_sites), std::move(entries));
}

GeneratorPair make_generators(int n_sites, Topology topology, int jc_site) {
  GeneratorPair pair;
  pair.h_g = build_jc_generator(n_sites, jc_site);
  pair.h_j = build_xy_generator(build_coupling_map(n_sites, topology));
  pair.n_sites = n_sites;
  pair.jc_site = jc_site;
  pair.topology = topology;
  return pair;
}

SparseSymmetric assemble(const GeneratorPair& pair, double g, double j) {
  if (!std::isfinite(g) || !std::isfinite(j)) throw std::invalid_argument("non-finite coupling");
  std::vector<MatrixEntry> entries;
  entries.reserve(pair.h_g.nonzeros() + pair.h_j.nonzeros());
  for (auto e : pair.h_g.entries()) {
    e.value *= g;
    entries.push_back(e);
  }
  for (auto e : pair.h_j.entries()) {
    e.value *= j;
    entries.push_back(e);
  }
  return SparseSymmetric(pair.h_g.dim(), std::move(entries));
}

void write_coordinate(std::ostream& os, const SparseSymmetric& h) {
  os << "%%MatrixMarket matrix coordinate real symmetric\n";
  os << h.dim() << ' ' << h.dim() << ' ' << h.nonzeros() << '\n';
  char buf[64];
  for (const auto& e : h.entries()) {
    auto res = std::to_chars(buf, buf + sizeof buf, e.value);
    os << e.col + 1 << ' ' << e.row + 1 << ' ' << std::string_view(buf, res.ptr - buf) << '\n';
  }
}

}  // namespace jcxy

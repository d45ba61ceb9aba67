#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jcxy/eigensolve.hpp"
#include "oracle.hpp"

using namespace jcxy;
using jcxy::testing::max_abs_diff;

namespace {

DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  DenseMatrix m(static_cast<int>(rows.size()));
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

DenseMatrix random_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  DenseMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c) m(r, c) = m(c, r) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("small closed-form spectra") {
  CHECK(max_abs_diff(eigvals_symmetric(from_rows({{0, 1}, {1, 0}})), {-1, 1}) < 1e-15);
  CHECK(eigvals_symmetric(from_rows({{0}})) == std::vector<double>{0.0});
  const double r2 = std::numbers::sqrt2;
  CHECK(max_abs_diff(eigvals_symmetric(from_rows({{0, -1, 0}, {-1, 0, -1}, {0, -1, 0}})), {-r2, 0, r2}) <
        1e-14);
  CHECK(eigvals_symmetric(DenseMatrix(0)).empty());
}

TEST_CASE("rejects non-symmetric input") {
  CHECK_THROWS_AS(eigvals_symmetric(from_rows({{0, 1}, {0.5, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(largest_eigenvalue(from_rows({{0, 1}, {0.5, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(largest_eigenvalue(DenseMatrix(0)), std::invalid_argument);
}

TEST_CASE("random matrices agree with the reference solver") {
  std::mt19937_64 rng(42);
  for (int n : {2, 3, 5, 17, 64, 150}) {
    for (int rep = 0; rep < 3; ++rep) {
      const auto m = random_symmetric(n, rng);
      const auto ours = eigvals_symmetric(m);
      const auto ref = jcxy::testing::dense_eigenvalues(m);
      const double scale = std::max(1.0, std::max(std::abs(ref.front()), std::abs(ref.back())));
      CHECK(max_abs_diff(ours, ref) < 1e-10 * scale);
      CHECK(std::abs(largest_eigenvalue(m) - ref.back()) < 1e-12 * scale);
    }
  }
}

TEST_CASE("highly degenerate and already-diagonal inputs") {
  DenseMatrix diag(6);
  for (int i = 0; i < 6; ++i) diag(i, i) = i % 2 ? 2.0 : -1.0;
  CHECK(max_abs_diff(eigvals_symmetric(diag), {-1, -1, -1, 2, 2, 2}) == 0.0);

  DenseMatrix ones(8);
  for (double& x : ones.data()) x = 1.0;
  const auto ev = eigvals_symmetric(ones);
  for (int i = 0; i < 7; ++i) CHECK(std::abs(ev[i]) < 1e-13);
  CHECK(ev[7] == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(largest_eigenvalue(ones) == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("eigenvectors on demand") {
  std::mt19937_64 rng(7);
  const auto m = random_symmetric(40, rng);
  const auto sys = eigh_symmetric(m);
  CHECK(max_abs_diff(sys.values, eigvals_symmetric(m)) < 1e-11);
  for (int c = 0; c < 40; ++c) {
    double residual = 0.0;
    double norm = 0.0;
    for (int r = 0; r < 40; ++r) {
      double av = 0.0;
      for (int k = 0; k < 40; ++k) av += m(r, k) * sys.vectors(k, c);
      residual = std::max(residual, std::abs(av - sys.values[c] * sys.vectors(r, c)));
      norm += sys.vectors(r, c) * sys.vectors(r, c);
    }
    CHECK(residual < 1e-11);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("full spectrum examples") {
  const auto jc = full_spectrum(make_generators(1, Topology::OpenNN, 1), 1.0, 0.0);
  CHECK(max_abs_diff(jc.energies, {-1, 0, 0, 1}) < 1e-15);

  const auto xy = full_spectrum(make_generators(2, Topology::OpenNN, 1), 0.0, 1.0);
  CHECK(max_abs_diff(xy.energies, {-1, -1, 0, 0, 0, 0, 1, 1}) < 1e-15);

  for (auto t : all_topologies()) {
    for (int n = 1; n <= 7; ++n) {
      const auto spec = full_spectrum(make_generators(n, t, 1), 0.37, -0.81);
      CHECK(spec.size() == basis_dimension(n));
      CHECK(std::is_sorted(spec.energies.begin(), spec.energies.end()));
      int exact_zeros = 0;
      double sum = 0.0;
      for (std::size_t i = 0; i < spec.size(); ++i) {
        sum += spec.energies[i];
        const int twice = spec.sector_mz[i].twice();
        if (std::abs(twice) == n + 1) {
          CHECK(spec.energies[i] == 0.0);
          ++exact_zeros;
        }
        CHECK(spec.inv_label(i) - spec.sector_mz[i] == HalfInt::from_twice(1));
      }
      CHECK(exact_zeros == 2);
      CHECK(std::abs(sum) < 1e-9 * spec.size());
    }
  }
}

TEST_CASE("degeneracy summary") {
  CHECK(degeneracy_summary(std::vector<double>{0, 0, 0, 0}, 1e-8).distinct_count == 1);
  const auto s = degeneracy_summary(std::vector<double>{-1, -1 + 1e-12, 0, 0.5, 0.5}, 1e-8);
  REQUIRE(s.distinct_count == 3);
  CHECK(s.levels[0].multiplicity == 2);
  CHECK(s.levels[1].multiplicity == 1);
  CHECK(s.levels[2].multiplicity == 2);
  CHECK_THROWS_AS(degeneracy_summary(std::vector<double>{1}, 0.0), std::invalid_argument);

  const auto n2 = full_spectrum(make_generators(2, Topology::OpenNN, 1), 0.0, 1.0);
  CHECK(degeneracy_summary(n2, 1e-8).distinct_count == 3);
  const auto n6 = full_spectrum(make_generators(6, Topology::OpenNN, 1), 0.0, 1.0);
  const auto d6 = degeneracy_summary(n6, 1e-8);
  CHECK(d6.distinct_count == 27);
  int total = 0;
  for (const auto& l : d6.levels) total += l.multiplicity;
  CHECK(total == 128);
}

TEST_CASE("negation symmetry of the merged spectrum") {
  for (auto t : all_topologies()) {
    const SectorSolver solver(make_generators(5, t, 1));
    for (auto [g, j] : jcxy::testing::random_couplings(4, 99)) {
      const auto a = solver.spectrum(g, j).energies;
      auto b = solver.spectrum(-g, -j).energies;
      std::reverse(b.begin(), b.end());
      for (auto& x : b) x = -x;
      CHECK(max_abs_diff(a, b) < 1e-10);
    }
  }
}

TEST_CASE("top eigenvalue matches the full spectrum maximum") {
  for (auto t : all_topologies()) {
    const SectorSolver solver(make_generators(6, t, 2));
    for (auto [g, j] : jcxy::testing::random_couplings(4, 5)) {
      CHECK(solver.top_eigenvalue(g, j) == doctest::Approx(solver.spectrum(g, j).energies.back()).epsilon(1e-12));
    }
  }
}

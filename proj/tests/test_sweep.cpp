#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jcxy/sweep.hpp"
#include "oracle.hpp"

using namespace jcxy;
using jcxy::testing::max_abs_diff;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

TEST_CASE("phi grids") {
  const auto g = PhiGrid::uniform(kDefaultGridPoints);
  REQUIRE(g.size() == 721);
  CHECK(g.values().front() == -kHalfPi);
  CHECK(g.values().back() == kHalfPi);
  CHECK(g.values()[360] == 0.0);
  CHECK(g.values()[1] - g.values()[0] == doctest::Approx(std::numbers::pi / 720));
  CHECK(std::adjacent_find(g.values().begin(), g.values().end(), std::greater_equal<>()) == g.values().end());

  const auto l = PhiGrid::from_list({0.5, -0.2, 0.5});
  CHECK(l.values() == std::vector<double>{-kHalfPi, -0.2, 0.5, kHalfPi});
  CHECK_THROWS_AS(PhiGrid::uniform(1), std::invalid_argument);
  CHECK_THROWS_AS(PhiGrid::from_list({}), std::invalid_argument);
  CHECK_THROWS_AS(PhiGrid::from_list({2.0}), std::invalid_argument);

  CHECK(couplings_at(kHalfPi).g == 0.0);
  CHECK(couplings_at(-kHalfPi).j == -1.0);
  CHECK(couplings_at(0.0).j == 0.0);
}

TEST_CASE("pure JC point has levels -1, 0, +1") {
  for (int n = 1; n <= 7; ++n) {
    const SectorSolver solver(make_generators(n, Topology::OpenNN, 1));
    const auto r = sweep_serial(solver, PhiGrid::from_list({0.0}));
    const auto summary = degeneracy_summary(r.spectra[1], 1e-8);
    REQUIRE(summary.distinct_count == 3);
    CHECK(summary.levels[0].value == doctest::Approx(-1.0));
    CHECK(summary.levels[0].multiplicity == (1 << (n - 1)));
    CHECK(std::abs(summary.levels[1].value) < 1e-12);
    CHECK(summary.levels[1].multiplicity == (1 << n));
    CHECK(summary.levels[2].multiplicity == (1 << (n - 1)));
  }
}

TEST_CASE("pure magnetic endpoints") {
  for (auto t : all_topologies()) {
    const SectorSolver solver(make_generators(5, t, 1));
    const auto r = sweep_serial(solver, PhiGrid::uniform(3));
    auto lo = r.spectra.front().energies;
    const auto& hi = r.spectra.back().energies;
    std::reverse(lo.begin(), lo.end());
    for (auto& x : lo) x = -x;
    CHECK(max_abs_diff(lo, hi) < 1e-12);

    // G = 0: photon decouples, every XY level appears twice.
    const auto xy = jcxy::testing::whole_matrix_eigenvalues(build_xy_generator(build_coupling_map(5, t)));
    CHECK(max_abs_diff(hi, xy) < 1e-12);
    for (std::size_t i = 0; i < hi.size(); i += 2) CHECK(std::abs(hi[i] - hi[i + 1]) < 1e-12);
  }
}

TEST_CASE("parallel sweep is bit-identical to the serial reference") {
  const SectorSolver solver(make_generators(6, Topology::RingLongRangeChord, 2));
  const auto grid = PhiGrid::uniform(41);
  const auto ref = sweep_serial(solver, grid);
  for (int workers : {1, 2, 3, 4}) {
    const auto par = sweep(solver, grid, workers);
    REQUIRE(par.spectra.size() == ref.spectra.size());
    for (std::size_t i = 0; i < ref.spectra.size(); ++i) {
      CHECK(par.spectra[i].energies == ref.spectra[i].energies);
      CHECK(par.spectra[i].sector_mz == ref.spectra[i].sector_mz);
    }
  }
  CHECK_THROWS_AS(sweep(solver, grid, 0), std::invalid_argument);
}

TEST_CASE("normalization is idempotent under coupling rescaling") {
  const SectorSolver solver(make_generators(5, Topology::OpenLongRange, 1));
  for (double phi : {-1.1, -0.3, 0.4, 1.2}) {
    const auto c = couplings_at(phi);
    const auto unit = solver.spectrum(c.g, c.j).energies;
    for (double scale : {0.25, 2.0, 8.0}) {
      auto scaled = solver.spectrum(scale * c.g, scale * c.j).energies;
      for (auto& e : scaled) e /= std::hypot(scale * c.g, scale * c.j) / std::hypot(c.g, c.j);
      CHECK(scaled == unit);  // power-of-two scales are exact
    }
    auto scaled = solver.spectrum(3.7 * c.g, 3.7 * c.j).energies;
    for (auto& e : scaled) e /= 3.7;
    CHECK(max_abs_diff(scaled, unit) < 1e-13);
  }
}

TEST_CASE("maximum search on short chains") {
  const auto n2 = find_max(SectorSolver(make_generators(2, Topology::OpenNN, 1)));
  CHECK(n2.is_flat);
  CHECK(n2.e_max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(n2.phi_max == 0.0);

  const auto n3 = find_max(SectorSolver(make_generators(3, Topology::OpenNN, 1)));
  CHECK_FALSE(n3.is_flat);
  CHECK(std::abs(n3.e_max - 1.6180) < 5e-4);
  CHECK(std::abs(n3.phi_max - (-1.0196)) < 5e-3);

  const auto n4 = find_max(SectorSolver(make_generators(4, Topology::OpenNN, 1)));
  CHECK(std::abs(n4.e_max - 2.2361) < 5e-4);
  CHECK(n4.phi_max == -kHalfPi);
}

TEST_CASE("even/odd location of the maximum") {
  for (int n : {4, 6}) {
    const auto r = find_max(SectorSolver(make_generators(n, Topology::OpenNN, 1)));
    CHECK(std::abs(std::abs(r.phi_max) - kHalfPi) < 1e-6);
  }
  for (int n : {3, 5, 7}) {
    const auto r = find_max(SectorSolver(make_generators(n, Topology::OpenNN, 1)));
    CHECK(std::abs(r.phi_max) < kHalfPi - 1e-3);
  }
}

TEST_CASE("symmetry taxonomy") {
  const double quarter = std::numbers::pi / 4;
  auto report = [&](int n, Topology t) { return symmetry_report(SectorSolver(make_generators(n, t, 1)), {quarter}); };

  const auto open5 = report(5, Topology::OpenNN);
  CHECK(open5.j_sign == SymmetryStatus::Held);
  CHECK(open5.g_sign == SymmetryStatus::Held);

  const auto lr5 = report(5, Topology::OpenLongRange);
  CHECK(lr5.g_sign == SymmetryStatus::Held);
  CHECK(lr5.j_sign == SymmetryStatus::Broken);

  const auto ring6 = report(6, Topology::RingNN);
  CHECK(ring6.j_sign == SymmetryStatus::Held);
  CHECK(ring6.g_sign == SymmetryStatus::Held);
  CHECK(report(5, Topology::RingNN).j_sign == SymmetryStatus::Broken);

  CHECK(classify_symmetry(1e-6) == SymmetryStatus::Inconclusive);
  CHECK(to_string(SymmetryStatus::Broken) == "broken");
  const SectorSolver s(make_generators(3, Topology::OpenNN, 1));
  CHECK_THROWS_AS(symmetry_report(s, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(symmetry_report(s, {kHalfPi}), std::invalid_argument);
}

TEST_CASE("sector spectroscopy") {
  const auto grid = PhiGrid::uniform(61);
  for (int n : {5, 6}) {
    const SectorSolver solver(make_generators(n, Topology::OpenNN, 1));
    const auto edge = sector_sweep(solver, grid, HalfInt::from_twice(n + 1));
    for (const auto& spec : edge.spectra) {
      REQUIRE(spec.size() == 2);
      for (double e : spec.energies) CHECK(e == 0.0);
    }
    CHECK(edge.metadata.sector_filter == HalfInt::from_twice(n + 1));
  }

  const SectorSolver five(make_generators(5, Topology::OpenNN, 1));
  const auto centre = sector_sweep(five, PhiGrid::from_list({kHalfPi}), HalfInt::from_int(0));
  const auto full = five.spectrum(0.0, 1.0);
  CHECK(centre.spectra.back().energies.back() == doctest::Approx(full.energies.back()).epsilon(1e-13));

  CHECK_THROWS_AS(sector_sweep(five, grid, HalfInt::from_twice(1)), std::invalid_argument);
  CHECK_THROWS_AS(sector_sweep(five, grid, HalfInt::from_int(4)), std::invalid_argument);
}

TEST_CASE("top energy curve is continuous") {
  const SectorSolver solver(make_generators(6, Topology::OpenNN, 1));
  const auto grid = PhiGrid::uniform(kDefaultGridPoints);
  const auto r = sweep(solver, grid, 2);
  // Lipschitz bound: |dE/dphi| <= ||h_g|| + ||h_j||.
  const auto g_norm = std::abs(solver.spectrum(1.0, 0.0).energies.back());
  const auto j_spec = solver.spectrum(0.0, 1.0).energies;
  const double j_norm = std::max(std::abs(j_spec.front()), std::abs(j_spec.back()));
  const double step = grid.values()[1] - grid.values()[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    CHECK(std::abs(r.spectra[i].energies.back() - r.spectra[i - 1].energies.back()) <
          10 * step * (g_norm + j_norm));
  }
}

TEST_CASE("extremal sectors are identically zero, no sector is entirely zero otherwise") {
  for (int n : {3, 4, 5}) {
    const SectorSolver solver(make_generators(n, Topology::OpenNN, 1));
    const auto& sectors = solver.sectors();
    for (const double phi : PhiGrid::uniform(37).values()) {
      const auto c = couplings_at(phi);
      CHECK(solver.sector_eigenvalues(0, c.g, c.j) == std::vector<double>{0.0});
      CHECK(solver.sector_eigenvalues(sectors.size() - 1, c.g, c.j) == std::vector<double>{0.0});
    }
    // Inner sectors may keep dark zero modes, but carry nonzero levels at a generic point.
    for (std::size_t s = 1; s + 1 < sectors.size(); ++s) {
      const auto ev = solver.sector_eigenvalues(s, 0.6, 0.8);
      CHECK(std::any_of(ev.begin(), ev.end(), [](double e) { return std::abs(e) > 1e-3; }));
    }
  }
}

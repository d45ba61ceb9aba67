#include <doctest.h>

#include <sstream>

#include "jcxy/output.hpp"

using namespace jcxy;

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-1.5707963267948966) == "-1.57079632679");
  CHECK(format_number(2.23606797749979) == "2.2360679775");
  CHECK(format_number(1e-17) == "1e-17");
  CHECK(format_number(-3.5) == "-3.5");
}

TEST_CASE("records and CSV") {
  const SectorSolver solver(make_generators(1, Topology::OpenNN, 1));
  const auto r = sweep_serial(solver, PhiGrid::uniform(3));
  const auto rows = flatten(r);
  REQUIRE(rows.size() == 12);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered = rows[i - 1].phi < rows[i].phi ||
                         (rows[i - 1].phi == rows[i].phi && rows[i - 1].energy <= rows[i].energy);
    CHECK(ordered);
  }
  std::ostringstream os;
  write_csv(os, flatten(r.spectra[1], 0.0));
  CHECK(os.str() ==
        "phi,total_mz,level_index,energy\n"
        "0,0,0,-1\n"
        "0,-1,1,0\n"
        "0,1,2,0\n"
        "0,0,3,1\n");
}

TEST_CASE("JSON round trip reproduces records exactly") {
  const SectorSolver solver(make_generators(4, Topology::RingLongRangeChord, 2));
  const auto r = sweep_serial(solver, PhiGrid::uniform(7), HalfInt::from_twice(1));
  JsonDocument doc{"sweep", r.metadata, std::nullopt, flatten(r)};
  doc.metadata.tolerance = 1e-8;
  doc.degeneracy = degeneracy_summary(r.spectra[2], 1e-8);
  std::stringstream ss;
  write_json(ss, doc);
  const auto back = read_json(ss);
  CHECK(back.kind == "sweep");
  CHECK(back.metadata.n_sites == 4);
  CHECK(back.metadata.topology == Topology::RingLongRangeChord);
  CHECK(back.metadata.jc_site == 2);
  CHECK(back.metadata.sector_filter == HalfInt::from_twice(1));
  CHECK(back.records == doc.records);
  REQUIRE(back.degeneracy.has_value());
  CHECK(back.degeneracy->distinct_count == doc.degeneracy->distinct_count);

  std::stringstream bad("{\"schema_version\": 99}");
  CHECK_THROWS_AS(read_json(bad), std::runtime_error);
  std::stringstream junk("not json");
  CHECK_THROWS_AS(read_json(junk), std::runtime_error);
}

TEST_CASE("embedded reference table") {
  CHECK(table_reference().size() == 9);
  CHECK(find_table_reference(10)->distinct_count == 256);
  CHECK(find_table_reference(7)->phi_max == -1.4212);
  CHECK_FALSE(find_table_reference(2)->phi_max.has_value());
  CHECK(find_table_reference(11) == nullptr);
}

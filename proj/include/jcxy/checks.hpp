#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jcxy/output.hpp"
#include "jcxy/sweep.hpp"

namespace jcxy {

/// One reproduced row of the distinct-count / maximum table.
struct TableRow {
  int n_sites;
  int jc_site;
  int distinct_count;  ///< at phi = pi/2
  MaxReport max;
};

TableRow compute_table_row(int n_sites, Topology topology, int jc_site, double tolerance, int workers);

struct ReferenceMatch {
  bool distinct_ok;
  bool e_max_ok;   ///< within 5e-4
  bool phi_max_ok; ///< within 5e-3 (odd N), pi/2 within 1e-6 (even N), flat for N = 2
};
ReferenceMatch compare_to_reference(const TableRow& row, const TableReference& ref);

/// JC sites 1..ceil(N/2) for odd N (only k = 1 otherwise); returns the best-matching row first.
std::vector<TableRow> scan_jc_sites(int n_sites, double tolerance, int workers);

struct PropertyResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct SuiteConfig {
  int n_sites = 4;
  Topology topology = Topology::OpenNN;
  int jc_site = 1;
  int random_draws = 5;
  unsigned seed = 2016;
  bool inject_sector_breaking = false;  ///< adds sigma_x on site 1; negative control
};

/// Commutation, zero modes, photon mapping, tracelessness, sector oracle and sign flip.
std::vector<PropertyResult> run_property_suite(const SuiteConfig& config);

}  // namespace jcxy

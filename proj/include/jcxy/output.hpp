#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jcxy/sweep.hpp"

namespace jcxy {

inline constexpr int kJsonSchemaVersion = 1;

/// One row of `phi,total_mz,level_index,energy`.
struct SpectrumRecord {
  double phi;
  HalfInt total_mz;
  int level_index;  ///< position in the sorted spectrum at this phi
  double energy;

  friend bool operator==(const SpectrumRecord&, const SpectrumRecord&) = default;
};

/// Records sorted by (phi, energy).
std::vector<SpectrumRecord> flatten(const SweepResult& result);
std::vector<SpectrumRecord> flatten(const Spectrum& spectrum, double phi);

/// 12 significant digits, '.' decimal point, no negative zero.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<SpectrumRecord>& records);

struct JsonDocument {
  std::string kind;  ///< "sweep" or "spectrum"
  SweepMetadata metadata;
  std::optional<DegeneracySummary> degeneracy;
  std::vector<SpectrumRecord> records;
};

void write_json(std::ostream& os, const JsonDocument& doc);
/// Throws std::runtime_error on schema mismatch.
JsonDocument read_json(std::istream& is);

/// Literature values for the open nearest-neighbour chain, decimal commas converted.
struct TableReference {
  int n_sites;
  int distinct_count;
  double e_max;
  std::optional<double> phi_max;  ///< empty for the flat N=2 row
};
const std::vector<TableReference>& table_reference();
const TableReference* find_table_reference(int n_sites);

}  // namespace jcxy

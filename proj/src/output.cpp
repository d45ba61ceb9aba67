#include "jcxy/output.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace jcxy {

std::vector<SpectrumRecord> flatten(const Spectrum& spectrum, double phi) {
  std::vector<SpectrumRecord> out;
  out.reserve(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    out.push_back({phi, spectrum.sector_mz[i], static_cast<int>(i), spectrum.energies[i]});
  }
  return out;
}

std::vector<SpectrumRecord> flatten(const SweepResult& result) {
  std::vector<SpectrumRecord> out;
  for (std::size_t p = 0; p < result.grid.size(); ++p) {
    auto rows = flatten(result.spectra[p], result.grid.values()[p]);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  std::string s(buf, res.ptr);
  if (s == "-0") s = "0";
  return s;
}

void write_csv(std::ostream& os, const std::vector<SpectrumRecord>& records) {
  os << "phi,total_mz,level_index,energy\n";
  for (const auto& r : records) {
    os << format_number(r.phi) << ',' << format_number(r.total_mz.value()) << ',' << r.level_index
       << ',' << format_number(r.energy) << '\n';
  }
}

using nlohmann::json;

void write_json(std::ostream& os, const JsonDocument& doc) {
  json meta = {
      {"n_sites", doc.metadata.n_sites},
      {"topology", std::string(to_string(doc.metadata.topology))},
      {"jc_site", doc.metadata.jc_site},
      {"tolerance", doc.metadata.tolerance},
  };
  meta["sector_filter"] = doc.metadata.sector_filter ? json(doc.metadata.sector_filter->twice())
                                                     : json(nullptr);
  json records = json::array();
  for (const auto& r : doc.records) {
    records.push_back({{"phi", r.phi},
                       {"total_mz_twice", r.total_mz.twice()},
                       {"level_index", r.level_index},
                       {"energy", r.energy}});
  }
  json root = {{"schema_version", kJsonSchemaVersion},
               {"kind", doc.kind},
               {"metadata", meta},
               {"records", records}};
  if (doc.degeneracy) {
    json levels = json::array();
    for (const auto& l : doc.degeneracy->levels) {
      levels.push_back({{"value", l.value}, {"multiplicity", l.multiplicity}});
    }
    root["degeneracy"] = {{"distinct_count", doc.degeneracy->distinct_count}, {"levels", levels}};
  }
  os << root.dump(1) << '\n';
}

JsonDocument read_json(std::istream& is) {
  json root;
  try {
    root = json::parse(is);
    if (root.at("schema_version").get<int>() != kJsonSchemaVersion) {
      throw std::runtime_error("unsupported schema_version");
    }
    JsonDocument doc;
    doc.kind = root.at("kind").get<std::string>();
    const auto& meta = root.at("metadata");
    doc.metadata.n_sites = meta.at("n_sites").get<int>();
    doc.metadata.topology = parse_topology(meta.at("topology").get<std::string>());
    doc.metadata.jc_site = meta.at("jc_site").get<int>();
    doc.metadata.tolerance = meta.at("tolerance").get<double>();
    if (!meta.at("sector_filter").is_null()) {
      doc.metadata.sector_filter = HalfInt::from_twice(meta.at("sector_filter").get<int>());
    }
    for (const auto& r : root.at("records")) {
      doc.records.push_back({r.at("phi").get<double>(),
                             HalfInt::from_twice(r.at("total_mz_twice").get<int>()),
                             r.at("level_index").get<int>(), r.at("energy").get<double>()});
    }
    if (root.contains("degeneracy")) {
      DegeneracySummary d;
      d.distinct_count = root["degeneracy"].at("distinct_count").get<int>();
      for (const auto& l : root["degeneracy"].at("levels")) {
        d.levels.push_back({l.at("value").get<double>(), l.at("multiplicity").get<int>()});
      }
      doc.degeneracy = d;
    }
    return doc;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed spectrum JSON: ") + e.what());
  }
}

const std::vector<TableReference>& table_reference() {
  static const std::vector<TableReference> rows = {
      {2, 3, 1.0, std::nullopt},   {3, 3, 1.6180, -1.0196},  {4, 9, 2.2361, -1.5708},
      {5, 9, 2.8064, -1.3188},     {6, 27, 3.4940, -1.5708}, {7, 27, 4.0649, -1.4212},
      {8, 58, 4.7588, -1.5708},    {9, 91, 5.3362, -1.4684}, {10, 256, 6.0267, -1.5708},
  };
  return rows;
}

const TableReference* find_table_reference(int n_sites) {
  const auto& rows = table_reference();
  auto it = std::find_if(rows.begin(), rows.end(), [&](const TableReference& r) { return r.n_sites == n_sites; });
  return it == rows.end() ? nullptr : &*it;
}

}  // namespace jcxy

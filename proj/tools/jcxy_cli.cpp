// Command-line front end: spectrum, sweep, table, verify, matrix.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "jcxy/checks.hpp"
#include "jcxy/output.hpp"
#include "jcxy/sweep.hpp"

namespace {

using namespace jcxy;

enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3, kPropertyFailure = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  int n_sites = 0;
  std::string topology = "open-nn";
  int jc_site = 1;
  double tolerance = 1e-8;
  std::string format = "csv";
  std::string out;
  int workers = 1;
};

void add_model_options(CLI::App* cmd, CommonOptions& o, bool require_n) {
  auto* n = cmd->add_option("--n", o.n_sites, "number of spin sites")->check(CLI::Range(1, kMaxSites));
  if (require_n) n->required();
  cmd->add_option("--topology", o.topology, "open-nn | open-lr | ring-nn | ring-lr-arc | ring-lr-chord")
      ->capture_default_str();
  cmd->add_option("--k", o.jc_site, "site coupled to the photon (1-based)")->capture_default_str();
}

void add_output_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--workers", o.workers, "OpenMP worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--tol", o.tolerance, "degeneracy grouping tolerance")->check(CLI::PositiveNumber)->capture_default_str();
}

// Opens --out or falls back to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw UsageError("failed writing output file");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

SweepMetadata metadata_of(const CommonOptions& o) {
  SweepMetadata m;
  m.n_sites = o.n_sites;
  m.topology = parse_topology(o.topology);
  m.jc_site = o.jc_site;
  m.tolerance = o.tolerance;
  return m;
}

std::vector<double> parse_phi_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad phi value '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty phi grid");
  return out;
}

int cmd_spectrum(const CommonOptions& o, const std::vector<double>& phi, const std::optional<double>& g,
                 const std::optional<double>& j) {
  if (phi.size() > 1) throw UsageError("spectrum takes a single --phi");
  if (!phi.empty() && (g || j)) throw UsageError("give either --phi or --g/--j, not both");
  if (phi.empty() && !(g && j)) throw UsageError("give --phi, or both --g and --j");

  double angle = 0.0;
  Couplings c{};
  double norm = 1.0;
  if (!phi.empty()) {
    angle = phi.front();
    if (!std::isfinite(angle)) throw UsageError("phi must be finite");
    c = couplings_at(angle);
  } else {
    c = {*g, *j};
    norm = std::hypot(*g, *j);
    if (!(norm > 0.0)) throw UsageError("G and J cannot both be zero");
    angle = std::atan2(*j, *g);
  }

  const SectorSolver solver(make_generators(o.n_sites, parse_topology(o.topology), o.jc_site));
  Spectrum spec = solver.spectrum(c.g, c.j);
  if (norm != 1.0)
    for (auto& e : spec.energies) e /= norm;
  const auto summary = degeneracy_summary(spec, o.tolerance);

  Sink sink(o.out);
  if (o.format == "json") {
    write_json(sink.stream(), {"spectrum", metadata_of(o), summary, flatten(spec, angle)});
  } else {
    write_csv(sink.stream(), flatten(spec, angle));
  }
  sink.close();
  std::cerr << spec.size() << " energies, " << summary.distinct_count << " distinct (tol " << o.tolerance << ")\n";
  for (const auto& l : summary.levels) std::cerr << "  " << format_number(l.value) << " x" << l.multiplicity << '\n';
  return kOk;
}

int cmd_sweep(const CommonOptions& o, int points, const std::optional<std::string>& phi_list,
              const std::string& sector) {
  if (!phi_list && points < 2) throw UsageError("empty phi grid");
  const PhiGrid grid = phi_list ? PhiGrid::from_list(parse_phi_list(*phi_list)) : PhiGrid::uniform(points);
  std::optional<HalfInt> filter;
  if (!sector.empty()) filter = HalfInt::parse(sector);

  const SectorSolver solver(make_generators(o.n_sites, parse_topology(o.topology), o.jc_site));
  SweepResult result = sweep(solver, grid, o.workers, filter);
  result.metadata.tolerance = o.tolerance;

  Sink sink(o.out);
  if (o.format == "json") {
    write_json(sink.stream(), {"sweep", result.metadata, std::nullopt, flatten(result)});
  } else {
    write_csv(sink.stream(), flatten(result));
  }
  sink.close();
  return kOk;
}

int cmd_table(const CommonOptions& o, int n_min, int n_max, bool scan_k, bool strict) {
  if (n_min < 2 || n_max < n_min || n_max > kMaxSites) throw UsageError("bad N range");
  const Topology topology = parse_topology(o.topology);
  Sink sink(o.out);
  auto& os = sink.stream();
  os << "n,k,distinct,ref_distinct,e_max,ref_e_max,phi_max,ref_phi_max,is_flat,status\n";
  bool all_match = true;
  for (int n = n_min; n <= n_max; ++n) {
    const TableRow row = (scan_k && topology == Topology::OpenNN)
                             ? scan_jc_sites(n, o.tolerance, o.workers).front()
                             : compute_table_row(n, topology, o.jc_site, o.tolerance, o.workers);
    const TableReference* ref = topology == Topology::OpenNN ? find_table_reference(n) : nullptr;
    std::string status = "no-reference";
    if (ref != nullptr) {
      const auto m = compare_to_reference(row, *ref);
      status.clear();
      if (!m.distinct_ok) status += "distinct-mismatch;";
      if (!m.e_max_ok) status += "e_max-mismatch;";
      if (!m.phi_max_ok) status += "phi_max-mismatch;";
      if (status.empty()) status = "ok";
      all_match = all_match && status == "ok";
    }
    os << n << ',' << row.jc_site << ',' << row.distinct_count << ',' << (ref ? std::to_string(ref->distinct_count) : "")
       << ',' << format_number(row.max.e_max) << ',' << (ref ? format_number(ref->e_max) : "") << ','
       << (row.max.is_flat ? "flat" : format_number(row.max.phi_max)) << ','
       << (ref ? (ref->phi_max ? format_number(*ref->phi_max) : "flat") : "") << ','
       << (row.max.is_flat ? "true" : "false") << ',' << status << '\n';
  }
  sink.close();
  return (strict && !all_match) ? kPropertyFailure : kOk;
}

int cmd_verify(const CommonOptions& o, bool inject) {
  SuiteConfig cfg;
  cfg.n_sites = o.n_sites;
  cfg.topology = parse_topology(o.topology);
  cfg.jc_site = o.jc_site;
  cfg.inject_sector_breaking = inject;
  const auto results = run_property_suite(cfg);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    ok = ok && r.passed;
  }
  if (o.n_sites >= 2) {
    const double pi = std::numbers::pi;
    const auto sym = symmetry_report(SectorSolver(make_generators(o.n_sites, cfg.topology, o.jc_site)),
                                     {pi / 6, pi / 4, pi / 3});
    std::cout << "INFO J-sign symmetry E(G,J) = E(G,-J): " << to_string(sym.j_sign) << '\n';
    std::cout << "INFO G-sign symmetry E(G,J) = E(-G,J): " << to_string(sym.g_sign) << '\n';
  }
  if (!ok) {
    std::cerr << "property failures:";
    for (const auto& r : results)
      if (!r.passed) std::cerr << " [" << r.name << ']';
    std::cerr << '\n';
  }
  return ok ? kOk : kPropertyFailure;
}

int cmd_matrix(const CommonOptions& o, double g, double j) {
  const auto h = assemble(make_generators(o.n_sites, parse_topology(o.topology), o.jc_site), g, j);
  Sink sink(o.out);
  write_coordinate(sink.stream(), h);
  sink.close();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of a spin-1/2 XY molecule coupled to one truncated photon mode"};
  app.require_subcommand(1);

  CommonOptions spectrum_opts, sweep_opts, table_opts, verify_opts, matrix_opts;

  auto* spectrum = app.add_subcommand("spectrum", "spectrum at one coupling point");
  add_model_options(spectrum, spectrum_opts, true);
  add_output_options(spectrum, spectrum_opts);
  std::vector<double> phi;
  std::optional<double> g_opt, j_opt;
  spectrum->add_option("--phi", phi, "angle with G = cos(phi), J = sin(phi)")->expected(1)->multi_option_policy(
      CLI::MultiOptionPolicy::TakeAll);
  spectrum->add_option("--g", g_opt, "JC coupling G");
  spectrum->add_option("--j", j_opt, "XY coupling J");

  auto* sweep_cmd = app.add_subcommand("sweep", "normalized spectra over phi in [-pi/2, pi/2]");
  add_model_options(sweep_cmd, sweep_opts, true);
  add_output_options(sweep_cmd, sweep_opts);
  int points = kDefaultGridPoints;
  std::string phi_list, sector;
  sweep_cmd->add_option("--points", points, "uniform grid size")->capture_default_str();
  auto* phi_list_opt = sweep_cmd->add_option("--phi-list", phi_list, "comma-separated phi values (endpoints are added)");
  sweep_cmd->add_option("--sector", sector, "keep only sectors with this |total M_z| (e.g. 7/2)");

  auto* table = app.add_subcommand("table", "distinct levels at phi=pi/2 and the sweep maximum per N");
  add_model_options(table, table_opts, false);
  add_output_options(table, table_opts);
  int n_min = 2, n_max = 10;
  bool scan_k = false, strict = false;
  table->add_option("--n-min", n_min)->capture_default_str();
  table->add_option("--n-max", n_max)->capture_default_str();
  table->add_flag("--scan-k", scan_k, "odd N: try JC sites 1..ceil(N/2), keep the best match");
  table->add_flag("--strict", strict, "exit 4 if any row deviates from the reference");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_model_options(verify, verify_opts, true);
  bool inject = false;
  verify->add_flag("--inject-sector-breaking", inject)->group("");

  auto* matrix = app.add_subcommand("matrix", "dump H(G,J) in coordinate format");
  add_model_options(matrix, matrix_opts, true);
  double mg = 1.0, mj = 1.0;
  matrix->add_option("--g", mg)->capture_default_str();
  matrix->add_option("--j", mj)->capture_default_str();
  matrix->add_option("--out", matrix_opts.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(spectrum_opts, phi, g_opt, j_opt);
    if (*sweep_cmd) {
      return cmd_sweep(sweep_opts, points,
                       phi_list_opt->count() > 0 ? std::optional<std::string>(phi_list) : std::nullopt, sector);
    }
    if (*table) return cmd_table(table_opts, n_min, n_max, scan_k, strict);
    if (*verify) return cmd_verify(verify_opts, inject);
    if (*matrix) return cmd_matrix(matrix_opts, mg, mj);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SolverError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

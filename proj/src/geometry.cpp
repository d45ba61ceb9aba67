#include "jcxy/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jcxy/basis.hpp"

namespace jcxy {

namespace {

struct NamedTopology {
  Topology topology;
  std::string_view name;
};

constexpr NamedTopology kNames[] = {
    {Topology::OpenNN, "open-nn"},
    {Topology::OpenLongRange, "open-lr"},
    {Topology::RingNN, "ring-nn"},
    {Topology::RingLongRangeArc, "ring-lr-arc"},
    {Topology::RingLongRangeChord, "ring-lr-chord"},
};

// Weight for sites separated by `sep` index steps (1 <= sep <= n-1), or 0 if uncoupled.
double pair_weight(int n, int sep, Topology t) {
  switch (t) {
    case Topology::OpenNN:
      return sep == 1 ? 1.0 : 0.0;
    case Topology::RingNN:
      return (sep == 1 || (n >= 3 && sep == n - 1)) ? 1.0 : 0.0;
    case Topology::OpenLongRange:
      return 1.0 / (static_cast<double>(sep) * sep);
    case Topology::RingLongRangeArc: {
      const double arc = std::min(sep, n - sep);
      return 1.0 / (arc * arc);
    }
    case Topology::RingLongRangeChord: {
      // Chord over unit side: sin(pi s / N) / sin(pi / N), s the ring distance.
      const int ring_sep = std::min(sep, n - sep);
      if (ring_sep == 1) return 1.0;
      const double pi = std::numbers::pi;
      const double chord = std::sin(pi * ring_sep / n) / std::sin(pi / n);
      return 1.0 / (chord * chord);
    }
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(Topology t) {
  for (const auto& entry : kNames) {
    if (entry.topology == t) return entry.name;
  }
  return "unknown";
}

Topology parse_topology(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.topology;
  }
  throw std::invalid_argument("unknown topology '" + std::string(name) +
                              "' (expected open-nn, open-lr, ring-nn, ring-lr-arc, ring-lr-chord)");
}

std::vector<Topology> all_topologies() {
  std::vector<Topology> out;
  for (const auto& entry : kNames) out.push_back(entry.topology);
  return out;
}

bool is_ring(Topology t) {
  return t == Topology::RingNN || t == Topology::RingLongRangeArc ||
         t == Topology::RingLongRangeChord;
}

CouplingMap build_coupling_map(int n_sites, Topology topology) {
  validate_n_sites(n_sites);
  CouplingMap map{n_sites, topology, {}};
  // Ordered by separation, then by first site.
  for (int sep = 1; sep < n_sites; ++sep) {
    const double w = pair_weight(n_sites, sep, topology);
    if (w == 0.0) continue;
    for (int i = 1; i + sep <= n_sites; ++i) map.bonds.push_back({i, i + sep, w});
  }
  return map;
}

std::vector<SeparationWeight> distance_profile(int n_sites, Topology topology) {
  validate_n_sites(n_sites);
  std::vector<SeparationWeight> out;
  for (int sep = 1; sep < n_sites; ++sep) {
    int reported = sep;
    if (is_ring(topology)) reported = std::min(sep, n_sites - sep);
    const double w = pair_weight(n_sites, sep, topology);
    if (w == 0.0) continue;
    if (std::any_of(out.begin(), out.end(),
                    [&](const SeparationWeight& s) { return s.separation == reported; })) {
      continue;
    }
    out.push_back({reported, w});
  }
  std::sort(out.begin(), out.end(),
            [](const SeparationWeight& a, const SeparationWeight& b) { return a.separation < b.separation; });
  return out;
}

}  // namespace jcxy

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jcxy {

enum class Topology {
  OpenNN,
  OpenLongRange,
  RingNN,
  RingLongRangeArc,    ///< inverse-square of the distance along the ring
  RingLongRangeChord,  ///< inverse-square of the straight chord, unit polygon side
};

/// "open-nn", "open-lr", "ring-nn", "ring-lr-arc", "ring-lr-chord"
std::string_view to_string(Topology t);
Topology parse_topology(std::string_view name);
std::vector<Topology> all_topologies();

bool is_ring(Topology t);

struct Bond {
  int i;  ///< 1-based site, i < j
  int j;
  double w;  ///< positive weight, J_ij = J * w
};

struct CouplingMap {
  int n_sites = 0;
  Topology topology = Topology::OpenNN;
  std::vector<Bond> bonds;
};

CouplingMap build_coupling_map(int n_sites, Topology topology);

struct SeparationWeight {
  int separation;
  double w;
};

/// Weight as a function of index separation j - i, one entry per separation present.
std::vector<SeparationWeight> distance_profile(int n_sites, Topology topology);

}  // namespace jcxy

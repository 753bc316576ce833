#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latdist/configuration.hpp"

namespace latdist {

struct SearchBudget {
  std::int64_t max_seconds = 600;
  std::int64_t max_candidates = 100000;
  std::uint64_t seed = 0;  // recorded in output; the search itself is deterministic
};

struct TraceEntry {
  std::string strategy;
  std::int64_t k = 0;
  std::int64_t n = 0;
};

struct SearchResult {
  Configuration best;
  std::int64_t k_achieved = 0;
  std::int64_t n_achieved = 0;
  bool target_met = false;
  std::vector<TraceEntry> trace;
};

// Triangular disks whose point count lies within +-15 of n_target (one disk
// per achievable count), plus centered hexagons in the same window.
std::vector<Configuration> enumerate_disk_candidates(std::int64_t n_target);

// Repeatedly removes the point whose deletion shrinks the distinct-distance
// count the most, until n_target points remain. Ties: farthest from the
// centroid, then lexicographically smallest (a, b). Deterministic.
Configuration greedy_prune(const Configuration& start, std::int64_t n_target);

// Looks for a configuration with at least n_min points and at most k_target
// distinct distances: disks and hexagons by increasing size first, then
// greedy prunes of the nearest supersets. Every reported count is validated
// with distinct_distances_exact.
SearchResult find_witness(std::int64_t k_target, std::int64_t n_min,
                          const SearchBudget& budget);

}  // namespace latdist

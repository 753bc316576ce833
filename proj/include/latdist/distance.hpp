#pragma once

#include <cstdint>
#include <vector>

#include "latdist/configuration.hpp"

namespace latdist {

// Sorted set of positive squared distances. Within one lattice, distinct
// squared distances are in bijection with distinct distances, so all
// counting is exact integer arithmetic.
struct SquaredDistanceSet {
  std::vector<Coord> values;  // strictly increasing, all >= 1

  std::int64_t count() const { return static_cast<std::int64_t>(values.size()); }
};

inline constexpr std::int64_t kExactPairGuard = 100000;

// Squared distances over all point pairs. Quadratic in |c|; refuses
// configurations above kExactPairGuard points unless allow_large is set.
SquaredDistanceSet distinct_distances_exact(const Configuration& c,
                                            bool allow_large = false);

// Distinct distance count of H_s via the reduced origin-to-upper-half
// enumeration; O(s^2) instead of O(s^4) pairs.
std::int64_t distinct_distances_hex(int s);

// Distinct distance count of the s x s square array: |{a^2+b^2 : 0<=b<=a<=s-1}|-{0}.
std::int64_t distinct_distances_square(int s);

// Published overestimate for the distinct distances of a lattice disk: the
// number of integers representable by the lattice form in [0, floor(4R)].
// Including the zero value matches the published data tables; the result
// still dominates the exact count.
std::int64_t disk_distance_overestimate(Lattice lattice, double max_sq_radius);

// floor(n/2) for R_n; n/2 for R_n^+ when 6 | n, floor(n/2)+1 otherwise.
std::int64_t polygon_distance_count(const SymbolicPolygon& p);

}  // namespace latdist

#include "latdist/distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "latdist/number_theory.hpp"

namespace latdist {

SquaredDistanceSet distinct_distances_exact(const Configuration& c,
                                            bool allow_large) {
  const std::int64_t n = c.size();
  if (n < 2) throw std::domain_error("need at least two points");
  if (n > kExactPairGuard && !allow_large) {
    throw std::length_error("configuration exceeds the pairwise size guard");
  }
  std::unordered_set<Coord> seen;
  seen.reserve(static_cast<std::size_t>(n) * 4);
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    for (std::size_t j = i + 1; j < c.points.size(); ++j) {
      seen.insert(diff_norm(c.lattice, c.points[i], c.points[j]));
    }
  }
  SquaredDistanceSet out;
  out.values.assign(seen.begin(), seen.end());
  std::sort(out.values.begin(), out.values.end());
  return out;
}

std::int64_t distinct_distances_hex(int s) {
  if (s < 2) throw std::domain_error("distinct_distances_hex requires s >= 2");
  // Every distance of H_s occurs from the leftmost vertex to an upper-half
  // point; with that vertex at the origin the upper half is
  // {<a,b> : 0 <= b <= s-1, 0 <= a <= 2s-2-b}.
  const Coord h = s - 1;
  const Coord max_norm = (2 * h) * (2 * h);
  std::vector<bool> seen(static_cast<std::size_t>(max_norm) + 1, false);
  std::int64_t count = 0;
  for (Coord b = 0; b <= h; ++b) {
    for (Coord a = (b == 0 ? 1 : 0); a <= 2 * h - b; ++a) {
      const Coord v = a * a + a * b + b * b;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++count;
      }
    }
  }
  return count;
}

std::int64_t distinct_distances_square(int s) {
  if (s < 2) throw std::domain_error("distinct_distances_square requires s >= 2");
  const Coord h = s - 1;
  std::vector<bool> seen(static_cast<std::size_t>(2 * h * h) + 1, false);
  std::int64_t count = 0;
  for (Coord a = 1; a <= h; ++a) {
    for (Coord b = 0; b <= a; ++b) {
      const Coord v = a * a + b * b;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++count;
      }
    }
  }
  return count;
}

std::int64_t disk_distance_overestimate(Lattice lattice, double max_sq_radius) {
  if (!(max_sq_radius > 0.0)) {
    throw std::domain_error("disk squared radius must be positive");
  }
  if (4.0 * max_sq_radius > static_cast<double>(kSieveLimitGuard)) {
    throw std::length_error("sieve bound 4R exceeds the resource guard");
  }
  const auto bound = static_cast<std::int64_t>(std::floor(4.0 * max_sq_radius));
  if (bound < 1) return 1;  // only the zero value
  RepresentabilitySieve sieve(form_of(lattice), bound);
  return 1 + sieve.count_up_to(bound);
}

std::int64_t polygon_distance_count(const SymbolicPolygon& p) {
  if (!p.with_center) return p.n / 2;
  return p.n % 6 == 0 ? p.n / 2 : p.n / 2 + 1;
}

}  // namespace latdist

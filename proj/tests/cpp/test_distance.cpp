#include <cmath>
#include <vector>

#include "doctest.h"
#include "latdist/configuration.hpp"
#include "latdist/distance.hpp"
#include "latdist/number_theory.hpp"

using namespace latdist;

TEST_CASE("5x5 square array: the fourteen squared distances") {
  const auto d = distinct_distances_exact(square_array(5));
  const std::vector<Coord> expected{1, 2,  4,  5,  8,  9,  10,
                                    13, 16, 17, 18, 20, 25, 32};
  CHECK(d.values == expected);
  CHECK(d.count() == 14);
}

TEST_CASE("reduced hexagon count equals brute force for 2 <= s <= 12") {
  for (int s = 2; s <= 12; ++s) {
    CHECK(distinct_distances_hex(s) ==
          distinct_distances_exact(hex_array(s)).count());
  }
}

TEST_CASE("square array count equals brute force for 2 <= s <= 25") {
  for (int s = 2; s <= 25; ++s) {
    CHECK(distinct_distances_square(s) ==
          distinct_distances_exact(square_array(s)).count());
  }
}

TEST_CASE("hexagon bound k <= s^2 - 1 for s <= 100") {
  for (int s = 2; s <= 100; ++s) {
    CHECK(distinct_distances_hex(s) <= static_cast<std::int64_t>(s) * s - 1);
  }
}

TEST_CASE("published anchor counts") {
  CHECK(distinct_distances_hex(5) == 23);
  CHECK(distinct_distances_hex(14) == 172);
  CHECK(distinct_distances_hex(23) == 440);
  CHECK(distinct_distances_square(5) == 14);
  CHECK(distinct_distances_square(21) == 197);
  CHECK(distinct_distances_square(39) == 623);
}

namespace {

// Exact distinct distance count of the triangular disk of squared radius R,
// via a boolean table over the attainable squared values.
std::int64_t exact_tri_disk_count(double R) {
  const Configuration d = tri_disk(R);
  const auto bound = static_cast<std::size_t>(std::floor(4.0 * R));
  std::vector<bool> seen(bound + 1, false);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    for (std::size_t j = i + 1; j < d.points.size(); ++j) {
      const auto v = static_cast<std::size_t>(
          diff_norm(Lattice::Triangular, d.points[i], d.points[j]));
      if (!seen[v]) {
        seen[v] = true;
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("disk overestimate sandwich: 0 < estimate - exact < 4 sqrt(R)") {
  std::vector<double> radii;
  for (double R = 1; R <= 100; R += 7) radii.push_back(R);
  for (double R = 150; R <= 2000; R += 150) radii.push_back(R);
  radii.push_back(2000.0);
  for (double R : radii) {
    const std::int64_t est = disk_distance_overestimate(Lattice::Triangular, R);
    const std::int64_t exact = exact_tri_disk_count(R);
    CHECK(est > exact);
    CHECK(static_cast<double>(est - exact) < 4.0 * std::sqrt(R) + 1.0);
  }
}

TEST_CASE("disk overestimate equals 1 + sieve prefix count") {
  for (double R : {0.9, 5.0, 12.0, 100.0, 379.75}) {
    const auto bound = static_cast<std::int64_t>(std::floor(4.0 * R));
    RepresentabilitySieve tri(Form::Loeschian, bound);
    CHECK(disk_distance_overestimate(Lattice::Triangular, R) ==
          1 + tri.count_up_to(bound));
    RepresentabilitySieve sq(Form::TwoSquares, bound);
    CHECK(disk_distance_overestimate(Lattice::Square, R) ==
          1 + sq.count_up_to(bound));
  }
}

TEST_CASE("polygon distance counts") {
  CHECK(polygon_distance_count(polygon(3, false)) == 1);
  CHECK(polygon_distance_count(polygon(5, false)) == 2);
  CHECK(polygon_distance_count(polygon(13, false)) == 6);
  CHECK(polygon_distance_count(polygon(6, true)) == 3);
  CHECK(polygon_distance_count(polygon(12, true)) == 6);
  CHECK(polygon_distance_count(polygon(5, true)) == 3);
  CHECK(polygon_distance_count(polygon(8, true)) == 5);
}

TEST_CASE("pair guard") {
  Configuration big;
  big.lattice = Lattice::Square;
  big.points.resize(static_cast<std::size_t>(kExactPairGuard) + 1);
  CHECK_THROWS_AS(distinct_distances_exact(big), std::length_error);
}

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "latdist/configuration.hpp"

using namespace latdist;

TEST_CASE("hex_array has central hexagonal size and full symmetry") {
  for (int s = 1; s <= 12; ++s) {
    const Configuration h = hex_array(s);
    CHECK(h.size() == 3LL * s * s - 3LL * s + 1);
    // Closed under the 60-degree rotation (a,b) -> (-b, a+b).
    for (const Point& p : h.points) {
      const Point r{-p.b, p.a + p.b};
      CHECK(std::binary_search(h.points.begin(), h.points.end(), r));
    }
    CHECK(std::is_sorted(h.points.begin(), h.points.end()));
  }
  CHECK(hex_array(3).label == "H_3");
}

TEST_CASE("square_array basics") {
  const Configuration q = square_array(5);
  CHECK(q.size() == 25);
  CHECK(q.lattice == Lattice::Square);
  for (const Point& p : q.points) {
    CHECK(p.a >= 0);
    CHECK(p.a <= 4);
    CHECK(p.b >= 0);
    CHECK(p.b <= 4);
  }
}

TEST_CASE("make_configuration sorts, deduplicates, validates") {
  const Configuration c = make_configuration(
      Lattice::Square, {{2, 0}, {0, 0}, {2, 0}, {1, 1}}, "t");
  CHECK(c.size() == 3);
  CHECK(std::is_sorted(c.points.begin(), c.points.end()));
  CHECK_THROWS_AS(make_configuration(Lattice::Square, {}, ""),
                  std::domain_error);
}

TEST_CASE("disks contain exactly the points inside the radius") {
  for (double R : {1.0, 3.0, 7.5, 12.0, 19.0, 28.0, 100.3}) {
    const Configuration t = tri_disk(R);
    for (const Point& p : t.points) {
      CHECK(static_cast<double>(tri_norm(p.a, p.b)) <= R);
    }
    // Every lattice point in the bounding box inside R is present.
    std::int64_t inside = 0;
    for (Coord a = -40; a <= 40; ++a) {
      for (Coord b = -40; b <= 40; ++b) {
        if (static_cast<double>(tri_norm(a, b)) <= R) ++inside;
      }
    }
    CHECK(t.size() == inside);
    CHECK(t.size() == disk_point_count(Lattice::Triangular, R));

    const Configuration s = sq_disk(R);
    std::int64_t inside_sq = 0;
    for (Coord a = -40; a <= 40; ++a) {
      for (Coord b = -40; b <= 40; ++b) {
        if (static_cast<double>(sq_norm(a, b)) <= R) ++inside_sq;
      }
    }
    CHECK(s.size() == inside_sq);
    CHECK(s.size() == disk_point_count(Lattice::Square, R));
  }
}

TEST_CASE("disk_point_count matches materialization on larger radii") {
  for (double R : {500.0, 1234.5, 4000.0}) {
    CHECK(disk_point_count(Lattice::Triangular, R) ==
          tri_disk(R).size());
    CHECK(disk_point_count(Lattice::Square, R) == sq_disk(R).size());
  }
}

TEST_CASE("disk_sq_radius_for_points uses the lattice covolume") {
  CHECK(disk_sq_radius_for_points(Lattice::Square, 100) ==
        doctest::Approx(100.0 / std::numbers::pi));
  CHECK(disk_sq_radius_for_points(Lattice::Triangular, 100) ==
        doctest::Approx(std::numbers::sqrt3 * 50.0 / std::numbers::pi));
  // The sized disk holds approximately n points.
  for (std::int64_t n : {100, 1000, 10000}) {
    for (Lattice l : {Lattice::Triangular, Lattice::Square}) {
      const std::int64_t got = disk_point_count(l, disk_sq_radius_for_points(l, n));
      CHECK(std::abs(got - n) < 8 * static_cast<std::int64_t>(std::sqrt(n)));
    }
  }
}

TEST_CASE("configuration text round trip") {
  const Configuration h = hex_array(4);
  std::stringstream ss;
  write_configuration(ss, h, {"round trip"});
  const Configuration back = read_configuration(ss);
  CHECK(back.lattice == h.lattice);
  CHECK(back.points == h.points);

  std::stringstream bad("1 2\n3 4\n");
  CHECK_THROWS(read_configuration(bad));
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(polygon(2, false), std::domain_error);
  CHECK(polygon(7, true).n == 7);
}

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "latdist/lattice.hpp"

namespace latdist {

// A finite, deduplicated set of lattice points. Points are kept sorted so
// that equal configurations have identical representations.
struct Configuration {
  Lattice lattice = Lattice::Triangular;
  std::vector<Point> points;
  std::string label;

  std::int64_t size() const { return static_cast<std::int64_t>(points.size()); }
};

// Regular polygon R_n, optionally with a center point (R_n^+). Vertices are
// never materialized; distance counts for these are closed-form.
struct SymbolicPolygon {
  int n = 3;
  bool with_center = false;
};

// Sorts, deduplicates and range-checks; generators call this before returning.
Configuration make_configuration(Lattice lattice, std::vector<Point> points,
                                 std::string label);

// Centered hexagonal array H_s: {<a,b> : |a|,|b|,|a+b| <= s-1}, 3s^2-3s+1 points.
Configuration hex_array(int s);

// {0..s-1}^2 in the square lattice.
Configuration square_array(int s);

// All lattice points whose squared norm is at most max_sq_radius.
Configuration tri_disk(double max_sq_radius);
Configuration sq_disk(double max_sq_radius);

// Point count of the closed disk without materializing it; O(sqrt(R)).
std::int64_t disk_point_count(Lattice lattice, double max_sq_radius);

// Squared radius of the disk expected to hold about n points:
// sqrt(3)*n/(2*pi) for the triangular lattice, n/pi for the square one.
double disk_sq_radius_for_points(Lattice lattice, std::int64_t n);

SymbolicPolygon polygon(int n, bool with_center);

// Text format: optional '#' comment lines, then "lattice: tri|sq", then one
// "a b" pair per line.
void write_configuration(std::ostream& os, const Configuration& c,
                         const std::vector<std::string>& header_comments = {});
Configuration read_configuration(std::istream& is);

}  // namespace latdist

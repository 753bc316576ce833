#include "latdist/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace latdist {

Configuration make_configuration(Lattice lattice, std::vector<Point> points,
                                 std::string label) {
  if (points.empty()) {
    throw std::domain_error("configuration must contain at least one point");
  }
  for (const Point& p : points) check_coord_range(p.a, p.b);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return Configuration{lattice, std::move(points), std::move(label)};
}

Configuration hex_array(int s) {
  if (s < 1) throw std::domain_error("hex_array requires s >= 1");
  const Coord h = s - 1;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(3LL * s * s));
  for (Coord a = -h; a <= h; ++a) {
    for (Coord b = -h; b <= h; ++b) {
      if (a + b >= -h && a + b <= h) pts.push_back({a, b});
    }
  }
  return make_configuration(Lattice::Triangular, std::move(pts),
                            "H_" + std::to_string(s));
}

Configuration square_array(int s) {
  if (s < 1) throw std::domain_error("square_array requires s >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(s) * s);
  for (Coord a = 0; a < s; ++a)
    for (Coord b = 0; b < s; ++b) pts.push_back({a, b});
  return make_configuration(Lattice::Square, std::move(pts),
                            "square_" + std::to_string(s));
}

namespace {

void check_disk_radius(double max_sq_radius) {
  if (!(max_sq_radius > 0.0)) {
    throw std::domain_error("disk squared radius must be positive");
  }
  if (max_sq_radius >= static_cast<double>(kCoordLimit) * kCoordLimit) {
    throw std::out_of_range("disk squared radius exceeds coordinate range guard");
  }
}

// Inclusive b-range for fixed a with tri_norm(a, b) <= R, or empty.
bool tri_b_range(Coord a, double R, Coord& lo, Coord& hi) {
  const double disc = 4.0 * R - 3.0 * static_cast<double>(a) * static_cast<double>(a);
  if (disc < 0.0) return false;
  const double root = std::sqrt(disc);
  lo = static_cast<Coord>(std::ceil((-static_cast<double>(a) - root) / 2.0)) - 1;
  hi = static_cast<Coord>(std::floor((-static_cast<double>(a) + root) / 2.0)) + 1;
  // Nudge against floating point error at the boundary.
  while (static_cast<double>(a * a + a * lo + lo * lo) > R) ++lo;
  while (static_cast<double>(a * a + a * hi + hi * hi) > R) --hi;
  return hi >= lo;
}

}  // namespace

Configuration tri_disk(double max_sq_radius) {
  check_disk_radius(max_sq_radius);
  const Coord amax =
      static_cast<Coord>(std::floor(std::sqrt(4.0 * max_sq_radius / 3.0))) + 1;
  std::vector<Point> pts;
  for (Coord a = -amax; a <= amax; ++a) {
    Coord lo, hi;
    if (!tri_b_range(a, max_sq_radius, lo, hi)) continue;
    for (Coord b = lo; b <= hi; ++b) pts.push_back({a, b});
  }
  std::ostringstream label;
  label << "tri_disk(" << max_sq_radius << ")";
  return make_configuration(Lattice::Triangular, std::move(pts), label.str());
}

Configuration sq_disk(double max_sq_radius) {
  check_disk_radius(max_sq_radius);
  const Coord amax = static_cast<Coord>(std::floor(std::sqrt(max_sq_radius))) + 1;
  std::vector<Point> pts;
  for (Coord a = -amax; a <= amax; ++a) {
    const double rem = max_sq_radius - static_cast<double>(a) * static_cast<double>(a);
    if (rem < 0.0) continue;
    Coord bmax = static_cast<Coord>(std::floor(std::sqrt(rem))) + 1;
    while (static_cast<double>(a * a + bmax * bmax) > max_sq_radius) --bmax;
    if (bmax < 0) continue;
    for (Coord b = -bmax; b <= bmax; ++b) pts.push_back({a, b});
  }
  std::ostringstream label;
  label << "sq_disk(" << max_sq_radius << ")";
  return make_configuration(Lattice::Square, std::move(pts), label.str());
}

std::int64_t disk_point_count(Lattice lattice, double max_sq_radius) {
  check_disk_radius(max_sq_radius);
  std::int64_t count = 0;
  if (lattice == Lattice::Triangular) {
    const Coord amax =
        static_cast<Coord>(std::floor(std::sqrt(4.0 * max_sq_radius / 3.0))) + 1;
    for (Coord a = -amax; a <= amax; ++a) {
      Coord lo, hi;
      if (tri_b_range(a, max_sq_radius, lo, hi)) count += hi - lo + 1;
    }
  } else {
    const Coord amax = static_cast<Coord>(std::floor(std::sqrt(max_sq_radius))) + 1;
    for (Coord a = -amax; a <= amax; ++a) {
      const double rem =
          max_sq_radius - static_cast<double>(a) * static_cast<double>(a);
      if (rem < 0.0) continue;
      Coord bmax = static_cast<Coord>(std::floor(std::sqrt(rem))) + 1;
      while (static_cast<double>(a * a + bmax * bmax) > max_sq_radius) --bmax;
      if (bmax >= 0) count += 2 * bmax + 1;
    }
  }
  return count;
}

double disk_sq_radius_for_points(Lattice lattice, std::int64_t n) {
  if (n < 1) throw std::domain_error("point count must be >= 1");
  const double nn = static_cast<double>(n);
  if (lattice == Lattice::Triangular) {
    return std::numbers::sqrt3 * nn / (2.0 * std::numbers::pi);
  }
  return nn / std::numbers::pi;
}

SymbolicPolygon polygon(int n, bool with_center) {
  if (n < 3) throw std::domain_error("polygon requires n >= 3");
  return SymbolicPolygon{n, with_center};
}

void write_configuration(std::ostream& os, const Configuration& c,
                         const std::vector<std::string>& header_comments) {
  for (const std::string& line : header_comments) os << "# " << line << "\n";
  if (!c.label.empty()) os << "# " << c.label << "\n";
  os << "lattice: " << lattice_name(c.lattice) << "\n";
  for (const Point& p : c.points) os << p.a << " " << p.b << "\n";
}

Configuration read_configuration(std::istream& is) {
  std::string line;
  Lattice lattice = Lattice::Triangular;
  bool have_lattice = false;
  std::vector<Point> pts;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_lattice) {
      std::istringstream ls(line);
      std::string key, value;
      ls >> key >> value;
      if (key != "lattice:" || (value != "tri" && value != "sq")) {
        throw std::runtime_error("expected 'lattice: tri|sq' header line");
      }
      lattice = value == "tri" ? Lattice::Triangular : Lattice::Square;
      have_lattice = true;
      continue;
    }
    std::istringstream ls(line);
    Point p;
    if (!(ls >> p.a >> p.b)) {
      throw std::runtime_error("malformed point line: " + line);
    }
    pts.push_back(p);
  }
  if (!have_lattice) throw std::runtime_error("missing 'lattice:' header line");
  return make_configuration(lattice, std::move(pts), "");
}

}  // namespace latdist

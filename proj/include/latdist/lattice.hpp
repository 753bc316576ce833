#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace latdist {

using Coord = std::int64_t;

// Coordinates are capped so that the quadratic forms below stay well inside
// the signed 64-bit range (3 * 2^60 < 2^63).
inline constexpr Coord kCoordLimit = Coord{1} << 30;

enum class Lattice { Triangular, Square };

inline const char* lattice_name(Lattice l) {
  return l == Lattice::Triangular ? "tri" : "sq";
}

// Integer lattice point. For the triangular lattice the coordinates are the
// coefficients of the basis (1,0), (1/2, sqrt(3)/2); for the square lattice
// they are ordinary Cartesian integers.
struct Point {
  Coord a{};
  Coord b{};
  auto operator<=>(const Point&) const = default;
};

inline void check_coord_range(Coord a, Coord b) {
  if (a > kCoordLimit || a < -kCoordLimit || b > kCoordLimit || b < -kCoordLimit) {
    throw std::out_of_range("lattice coordinate exceeds 2^30 range guard");
  }
}

// a^2 + a*b + b^2: the squared Euclidean length of a*(1,0) + b*(1/2,sqrt3/2).
inline Coord tri_norm(Coord a, Coord b) {
  check_coord_range(a, b);
  return a * a + a * b + b * b;
}

// a^2 + b^2.
inline Coord sq_norm(Coord a, Coord b) {
  check_coord_range(a, b);
  return a * a + b * b;
}

inline Coord form_norm(Lattice l, Coord a, Coord b) {
  return l == Lattice::Triangular ? tri_norm(a, b) : sq_norm(a, b);
}

inline Coord diff_norm(Lattice l, Point p, Point q) {
  return form_norm(l, p.a - q.a, p.b - q.b);
}

// Real embedding, for export only; all distance logic stays in integers.
inline std::pair<double, double> embed_tri(Point p) {
  return {static_cast<double>(p.a) + 0.5 * static_cast<double>(p.b),
          0.8660254037844386 * static_cast<double>(p.b)};
}

inline std::pair<double, double> embed_sq(Point p) {
  return {static_cast<double>(p.a), static_cast<double>(p.b)};
}

inline std::pair<double, double> embed(Lattice l, Point p) {
  return l == Lattice::Triangular ? embed_tri(p) : embed_sq(p);
}

}  // namespace latdist

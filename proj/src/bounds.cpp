#include "latdist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "latdist/configuration.hpp"
#include "latdist/distance.hpp"

namespace latdist {

std::optional<std::int64_t> known_g(std::int64_t k) {
  for (const auto& [kk, g] : kKnownG) {
    if (kk == k) return g;
  }
  return std::nullopt;
}

std::int64_t central_hex_number(std::int64_t s) {
  if (s < 1) throw std::domain_error("central_hex_number requires s >= 1");
  return 3 * s * s - 3 * s + 1;
}

std::int64_t lower_bound_g(std::int64_t k) {
  if (k < 1) throw std::domain_error("lower_bound_g requires k >= 1");
  auto t = static_cast<std::int64_t>(std::sqrt(static_cast<double>(k + 1)));
  while (t * t > k + 1) --t;
  while ((t + 1) * (t + 1) <= k + 1) ++t;
  return central_hex_number(t);
}

KRange covered_range(const WitnessPair& w) {
  if (w.k < 1 || w.n < 2) throw std::domain_error("invalid witness pair");
  return {w.k, (w.n - 2) / 2};
}

CoverageReport theorem_coverage(const std::vector<WitnessPair>& witnesses) {
  CoverageReport report;
  std::vector<bool> covered(static_cast<std::size_t>(report.window_hi + 1), false);
  for (const WitnessPair& w : witnesses) {
    const KRange r = covered_range(w);
    report.contributions.emplace_back(w, r);
    for (std::int64_t k = std::max(r.lo, report.window_lo);
         k <= std::min(r.hi, report.window_hi); ++k) {
      covered[static_cast<std::size_t>(k)] = true;
    }
  }
  for (std::int64_t k = report.window_lo; k <= report.window_hi; ++k) {
    if (!covered[static_cast<std::size_t>(k)]) report.gaps.push_back(k);
  }
  return report;
}

std::vector<WitnessPair> known_witness_pairs() {
  return {
      {8, 19, "H_3"},   {15, 37, "H_4"},  {23, 61, "H_5"},  {34, 91, "H_6"},
      {46, 127, "H_7"}, {59, 169, "H_8"}, {7, 16, "array"}, {9, 21, "array"},
      {10, 25, "array"}, {11, 27, "array"}, {13, 31, "array"},
  };
}

bool classify_polygon_optimality(int n, bool with_center) {
  const SymbolicPolygon p = polygon(n, with_center);
  const std::int64_t k = polygon_distance_count(p);
  const std::int64_t points = with_center ? n + 1 : n;
  if (auto g = known_g(k)) return points == *g;
  // For k >= 7 (and k = 5) we have g(k) > 2k+1, while a polygon never
  // exceeds 2k+1 points for its distance count.
  return false;
}

std::vector<WitnessPair> read_witness_file(std::istream& is) {
  std::vector<WitnessPair> out;
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    WitnessPair w;
    if (!(ls >> w.k >> w.n)) {
      throw std::runtime_error("malformed witness line: " + line);
    }
    ls >> w.source;
    if (w.k < 1 || w.n < 2) {
      throw std::runtime_error("witness out of range: " + line);
    }
    out.push_back(std::move(w));
  }
  return out;
}

void write_witness_file(std::ostream& os, const std::vector<WitnessPair>& ws) {
  os << "# k n source\n";
  for (const WitnessPair& w : ws) {
    os << w.k << " " << w.n << " " << (w.source.empty() ? "-" : w.source) << "\n";
  }
}

}  // namespace latdist

#include "latdist/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "latdist/distance.hpp"
#include "latdist/number_theory.hpp"

namespace latdist {

namespace {

// Ascending squared radii at which a triangular disk gains points.
std::vector<std::int64_t> loeschian_radii_up_to(std::int64_t bound) {
  RepresentabilitySieve sieve(Form::Loeschian, std::max<std::int64_t>(bound, 4));
  std::vector<std::int64_t> out;
  for (std::int64_t v = 1; v <= bound; ++v) {
    if (sieve.representable(v)) out.push_back(v);
  }
  return out;
}

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t limit_seconds;
  bool expired() const {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() >=
           limit_seconds;
  }
};

bool better(const SearchResult& cand, const SearchResult& incumbent) {
  if (incumbent.n_achieved == 0) return true;
  if (cand.k_achieved != incumbent.k_achieved)
    return cand.k_achieved < incumbent.k_achieved;
  if (cand.n_achieved != incumbent.n_achieved)
    return cand.n_achieved > incumbent.n_achieved;
  return cand.best.label < incumbent.best.label;
}

}  // namespace

std::vector<Configuration> enumerate_disk_candidates(std::int64_t n_target) {
  if (n_target < 2) throw std::domain_error("n_target must be >= 2");
  std::vector<Configuration> out;
  const std::int64_t window = 15;
  for (std::int64_t r : loeschian_radii_up_to(n_target + window)) {
    const std::int64_t n = disk_point_count(Lattice::Triangular,
                                            static_cast<double>(r));
    if (n > n_target + window) break;
    if (n >= n_target - window) out.push_back(tri_disk(static_cast<double>(r)));
  }
  for (int s = 1;; ++s) {
    const std::int64_t n = 3LL * s * s - 3LL * s + 1;
    if (n > n_target + window) break;
    if (n >= n_target - window) out.push_back(hex_array(s));
  }
  return out;
}

Configuration greedy_prune(const Configuration& start, std::int64_t n_target) {
  if (start.size() <= n_target) {
    if (start.size() == n_target) return start;
    throw std::domain_error("greedy_prune needs more points than the target");
  }
  std::vector<Point> pts = start.points;
  const Lattice lat = start.lattice;

  auto count_without = [&](std::size_t skip) {
    std::vector<Coord> vals;
    vals.reserve(pts.size() * pts.size() / 2);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == skip) continue;
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (j == skip) continue;
        vals.push_back(diff_norm(lat, pts[i], pts[j]));
      }
    }
    std::sort(vals.begin(), vals.end());
    return static_cast<std::int64_t>(
        std::unique(vals.begin(), vals.end()) - vals.begin());
  };

  while (static_cast<std::int64_t>(pts.size()) > n_target) {
    const auto m = static_cast<std::int64_t>(pts.size());
    Coord sum_a = 0, sum_b = 0;
    for (const Point& p : pts) {
      sum_a += p.a;
      sum_b += p.b;
    }
    std::size_t best_idx = 0;
    std::int64_t best_count = -1;
    Coord best_centroid_dist = -1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::int64_t cnt = count_without(i);
      // Scaled squared distance from the centroid: form(m*p - sum).
      const Coord cd = form_norm(lat, m * pts[i].a - sum_a, m * pts[i].b - sum_b);
      bool take = false;
      if (best_count < 0 || cnt < best_count) {
        take = true;
      } else if (cnt == best_count) {
        if (cd > best_centroid_dist) take = true;
        else if (cd == best_centroid_dist && pts[i] < pts[best_idx]) take = true;
      }
      if (take) {
        best_idx = i;
        best_count = cnt;
        best_centroid_dist = cd;
      }
    }
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(best_idx));
  }
  return make_configuration(lat, std::move(pts),
                            start.label + "/pruned" + std::to_string(n_target));
}

SearchResult find_witness(std::int64_t k_target, std::int64_t n_min,
                          const SearchBudget& budget) {
  if (k_target < 1 || n_min < 2) throw std::domain_error("invalid search target");
  Clock clock{.limit_seconds = budget.max_seconds};
  SearchResult best;
  std::int64_t candidates = 0;

  auto consider = [&](Configuration c, const std::string& strategy) {
    ++candidates;
    const std::int64_t k = distinct_distances_exact(c).count();
    const std::int64_t n = c.size();
    best.trace.push_back({strategy, k, n});
    SearchResult cand{std::move(c), k, n, k <= k_target && n >= n_min, {}};
    if (better(cand, best)) {
      best.best = std::move(cand.best);
      best.k_achieved = cand.k_achieved;
      best.n_achieved = cand.n_achieved;
      best.target_met = cand.target_met;
    }
    return best.target_met;
  };
  auto exhausted = [&] {
    return clock.expired() || candidates >= budget.max_candidates;
  };

  // Disks by increasing radius: cheap, maximally symmetric, and the best
  // known family for few distances per point.
  const std::int64_t radius_bound = n_min + 64;
  for (std::int64_t r : loeschian_radii_up_to(radius_bound)) {
    if (exhausted()) return best;
    const std::int64_t n =
        disk_point_count(Lattice::Triangular, static_cast<double>(r));
    if (n < n_min) continue;
    if (n > n_min + 64) break;
    if (consider(tri_disk(static_cast<double>(r)), "disk")) return best;
  }

  // Hexagonal arrays of the two smallest qualifying sizes.
  for (int s = 2, tried = 0; tried < 2 && !exhausted(); ++s) {
    const std::int64_t n = 3LL * s * s - 3LL * s + 1;
    if (n < n_min) continue;
    ++tried;
    if (consider(hex_array(s), "hex")) return best;
  }

  // Greedy prunes of the smallest strict supersets down to n_min.
  std::vector<Configuration> supersets;
  for (std::int64_t r : loeschian_radii_up_to(radius_bound)) {
    const std::int64_t n =
        disk_point_count(Lattice::Triangular, static_cast<double>(r));
    if (n > n_min) {
      supersets.push_back(tri_disk(static_cast<double>(r)));
      break;
    }
  }
  for (int s = 2;; ++s) {
    const std::int64_t n = 3LL * s * s - 3LL * s + 1;
    if (n > n_min) {
      supersets.push_back(hex_array(s));
      break;
    }
  }
  for (const Configuration& sup : supersets) {
    if (exhausted()) return best;
    if (consider(greedy_prune(sup, n_min), "prune")) return best;
  }
  return best;
}

}  // namespace latdist

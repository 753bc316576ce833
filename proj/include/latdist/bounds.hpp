#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace latdist {

// Evidence that g(k) >= n: some configuration with n points determines at
// most k distinct distances.
struct WitnessPair {
  std::int64_t k = 1;
  std::int64_t n = 2;
  std::string source;
};

// Resolved values of g for small k. These are imported constants; their
// classification proofs are out of scope here.
inline constexpr std::array<std::pair<int, int>, 6> kKnownG{{
    {1, 3}, {2, 5}, {3, 7}, {4, 9}, {5, 12}, {6, 13},
}};

std::optional<std::int64_t> known_g(std::int64_t k);

// 3s^2 - 3s + 1, the s-th central hexagonal number = |H_s|.
std::int64_t central_hex_number(std::int64_t s);

// g(k) >= 3t^2 - 3t + 1 with t = floor(sqrt(k+1)), via H_t.
std::int64_t lower_bound_g(std::int64_t k);

// Closed integer interval of k values; empty when hi < lo.
struct KRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return hi < lo; }
};

// The k for which a witness (k, n) proves g(k') > 2k'+1: n > 2k'+1 holds for
// k' <= (n-2)/2, and g is nondecreasing, so the witness covers the whole
// closed interval [k, floor((n-2)/2)].
KRange covered_range(const WitnessPair& w);

struct CoverageReport {
  std::int64_t window_lo = 7;
  std::int64_t window_hi = 62;
  std::vector<std::int64_t> gaps;  // k in the window not covered by any witness
  std::vector<std::pair<WitnessPair, KRange>> contributions;
};

// Unions covered_range over the witnesses; everything at k >= 63 is already
// covered by the floor bound, so only the window [7, 62] is examined.
CoverageReport theorem_coverage(const std::vector<WitnessPair>& witnesses);

// The eleven witness pairs that settle most of the window: hexagons H_3..H_8
// plus five further published arrays.
std::vector<WitnessPair> known_witness_pairs();

// True iff R_n (or R_n^+) has g(k) points for its distance count k.
// Yields exactly n in {3,5,7,9,13} without center and n in {6,12} with.
bool classify_polygon_optimality(int n, bool with_center);

// One "k n source" triple per line; '#' comments allowed.
std::vector<WitnessPair> read_witness_file(std::istream& is);
void write_witness_file(std::ostream& os, const std::vector<WitnessPair>& ws);

}  // namespace latdist

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latdist {

enum class Family { Hexagon, Square };

struct TableRow1 {
  Family family = Family::Hexagon;
  int s = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
};

struct TableRow2 {
  int s = 0;
  std::int64_t n1 = 0, k1 = 0;
  int s2 = 0;
  std::int64_t n2 = 0, k2 = 0;
  std::int64_t n3 = 0, k3 = 0;
  std::int64_t n4 = 0, k4 = 0;
  double ratio_k1_k2 = 0.0;
  double ratio_k3_k4 = 0.0;
  double ratio_k3_k1 = 0.0;
  double ratio_k4_k2 = 0.0;
};

inline constexpr int kTable1HexMaxDefault = 23;
inline constexpr int kTable1SquareMaxDefault = 39;
inline constexpr int kTable2RowsDefault = 98;

// Hexagon rows for 2 <= s <= hex_s_max, then square rows for 2 <= s <= sq_s_max.
std::vector<TableRow1> table1(int hex_s_max = kTable1HexMaxDefault,
                              int sq_s_max = kTable1SquareMaxDefault);

// Scans s = 23, 24, ... keeping the s where sqrt(n1) is within 0.05 of an
// integer s2, and compares four same-size families per row: H_s, the s2 x s2
// square array, and the two lattice disks sized for n1 points. Disk distance
// counts use the published sieve overestimate unless exact_disks is set
// (exact pairwise counting; only sensible for small row limits).
std::vector<TableRow2> table2(int row_limit = kTable2RowsDefault,
                              bool exact_disks = false, int threads = 0);

enum class TableFormat { Csv, Markdown };

std::string emit(const std::vector<TableRow1>& rows, TableFormat format);
std::string emit(const std::vector<TableRow2>& rows, TableFormat format);

}  // namespace latdist

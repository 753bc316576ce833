#include "latdist/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "latdist/configuration.hpp"
#include "latdist/distance.hpp"

namespace latdist {

std::vector<TableRow1> table1(int hex_s_max, int sq_s_max) {
  if (hex_s_max < 2 || sq_s_max < 2) {
    throw std::domain_error("table1 requires s ranges starting at 2");
  }
  std::vector<TableRow1> rows;
  for (int s = 2; s <= hex_s_max; ++s) {
    rows.push_back({Family::Hexagon, s, 3LL * s * s - 3LL * s + 1,
                    distinct_distances_hex(s)});
  }
  for (int s = 2; s <= sq_s_max; ++s) {
    rows.push_back({Family::Square, s, static_cast<std::int64_t>(s) * s,
                    distinct_distances_square(s)});
  }
  return rows;
}

namespace {

TableRow2 make_row2(int s, bool exact_disks) {
  TableRow2 r;
  r.s = s;
  r.n1 = 3LL * s * s - 3LL * s + 1;
  r.k1 = distinct_distances_hex(s);
  r.s2 = static_cast<int>(std::llround(std::sqrt(static_cast<double>(r.n1))));
  r.n2 = static_cast<std::int64_t>(r.s2) * r.s2;
  r.k2 = distinct_distances_square(r.s2);

  const double R3 = disk_sq_radius_for_points(Lattice::Triangular, r.n1);
  const double R4 = disk_sq_radius_for_points(Lattice::Square, r.n1);
  r.n3 = disk_point_count(Lattice::Triangular, R3);
  r.n4 = disk_point_count(Lattice::Square, R4);
  if (exact_disks) {
    r.k3 = distinct_distances_exact(tri_disk(R3)).count();
    r.k4 = distinct_distances_exact(sq_disk(R4)).count();
  } else {
    r.k3 = disk_distance_overestimate(Lattice::Triangular, R3);
    r.k4 = disk_distance_overestimate(Lattice::Square, R4);
  }

  r.ratio_k1_k2 = static_cast<double>(r.k1) / static_cast<double>(r.k2);
  r.ratio_k3_k4 = static_cast<double>(r.k3) / static_cast<double>(r.k4);
  r.ratio_k3_k1 = static_cast<double>(r.k3) / static_cast<double>(r.k1);
  r.ratio_k4_k2 = static_cast<double>(r.k4) / static_cast<double>(r.k2);
  return r;
}

}  // namespace

std::vector<TableRow2> table2(int row_limit, bool exact_disks, int threads) {
  if (row_limit < 1) throw std::domain_error("table2 requires row_limit >= 1");
  // Select the s values first; the filter is cheap and keeps ordering obvious.
  std::vector<int> selected;
  for (int s = 23; static_cast<int>(selected.size()) < row_limit; ++s) {
    const auto n1 = 3LL * s * s - 3LL * s + 1;
    const double root = std::sqrt(static_cast<double>(n1));
    if (std::abs(root - std::round(root)) < 0.05) selected.push_back(s);
  }

  std::vector<TableRow2> rows(selected.size());
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(selected.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      rows[i] = make_row2(selected[i], exact_disks);
    }
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= selected.size()) return;
        try {
          rows[i] = make_row2(selected[i], exact_disks);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

namespace {

const char* family_name(Family f) {
  return f == Family::Hexagon ? "hex" : "square";
}

std::string format_ratio(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5f", v);
  return buf;
}

}  // namespace

std::string emit(const std::vector<TableRow1>& rows, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::Csv) {
    os << "family,s,n,k\n";
    for (const TableRow1& r : rows) {
      os << family_name(r.family) << "," << r.s << "," << r.n << "," << r.k << "\n";
    }
  } else {
    os << "| family | s | n | k |\n|---|---|---|---|\n";
    for (const TableRow1& r : rows) {
      os << "| " << family_name(r.family) << " | " << r.s << " | " << r.n
         << " | " << r.k << " |\n";
    }
  }
  return os.str();
}

std::string emit(const std::vector<TableRow2>& rows, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::Csv) {
    os << "s,n1,k1,s2,n2,k2,n3,k3,n4,k4,"
          "k1_over_k2,k3_over_k4,k3_over_k1,k4_over_k2\n";
    for (const TableRow2& r : rows) {
      os << r.s << "," << r.n1 << "," << r.k1 << "," << r.s2 << "," << r.n2
         << "," << r.k2 << "," << r.n3 << "," << r.k3 << "," << r.n4 << ","
         << r.k4 << "," << format_ratio(r.ratio_k1_k2) << ","
         << format_ratio(r.ratio_k3_k4) << "," << format_ratio(r.ratio_k3_k1)
         << "," << format_ratio(r.ratio_k4_k2) << "\n";
    }
  } else {
    os << "| s | n1 | k1 | s2 | n2 | k2 | n3 | k3 | n4 | k4 | k1/k2 | k3/k4 | "
          "k3/k1 | k4/k2 |\n"
          "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const TableRow2& r : rows) {
      os << "| " << r.s << " | " << r.n1 << " | " << r.k1 << " | " << r.s2
         << " | " << r.n2 << " | " << r.k2 << " | " << r.n3 << " | " << r.k3
         << " | " << r.n4 << " | " << r.k4 << " | "
         << format_ratio(r.ratio_k1_k2) << " | " << format_ratio(r.ratio_k3_k4)
         << " | " << format_ratio(r.ratio_k3_k1) << " | "
         << format_ratio(r.ratio_k4_k2) << " |\n";
    }
  }
  return os.str();
}

}  // namespace latdist

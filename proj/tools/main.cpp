#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "latdist/bounds.hpp"
#include "latdist/configuration.hpp"
#include "latdist/distance.hpp"
#include "latdist/number_theory.hpp"
#include "latdist/report.hpp"
#include "latdist/search.hpp"

namespace {

using namespace latdist;

constexpr int kExitOk = 0;
constexpr int kExitTargetNotMet = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << text;
}

int run_gen(const std::string& family, int s, double sq_radius,
            const std::string& out) {
  Configuration c;
  if (family == "hex") {
    if (s < 1) throw CLI::ValidationError("gen", "--s is required for hex");
    c = hex_array(s);
  } else if (family == "square") {
    if (s < 1) throw CLI::ValidationError("gen", "--s is required for square");
    c = square_array(s);
  } else if (family == "tri-disk") {
    if (!(sq_radius > 0))
      throw CLI::ValidationError("gen", "--sq-radius is required for tri-disk");
    c = tri_disk(sq_radius);
  } else {
    if (!(sq_radius > 0))
      throw CLI::ValidationError("gen", "--sq-radius is required for sq-disk");
    c = sq_disk(sq_radius);
  }
  std::ostringstream os;
  write_configuration(os, c, {"n = " + std::to_string(c.size())});
  write_text(out, os.str());
  return kExitOk;
}

int run_count(const std::string& in, bool list) {
  std::ifstream is(in);
  if (!is) throw std::runtime_error("cannot open input file: " + in);
  const Configuration c = read_configuration(is);
  const SquaredDistanceSet d = distinct_distances_exact(c);
  std::cout << "n=" << c.size() << "\n";
  std::cout << "k=" << d.count() << "\n";
  if (list) {
    std::cout << "sq_distances=";
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      std::cout << (i ? "," : "") << d.values[i];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_constants(std::int64_t prime_bound) {
  const auto c = landau_ramanujan(prime_bound);
  const auto cp = loeschian_constant(prime_bound);
  const auto ratio = heuristic_ratio(prime_bound);
  const auto conj = conjecture_constant(prime_bound);
  std::printf("prime_bound=%lld\n", static_cast<long long>(prime_bound));
  std::printf("landau_ramanujan_c=%.9f\n", c.value);
  std::printf("loeschian_c_prime=%.9f\n", cp.value);
  std::printf("heuristic_ratio=%.9f\n", ratio.value);
  std::printf("conjecture_constant=%.9f\n", conj.value);
  return kExitOk;
}

int run_verify(const std::string& witness_file, bool search_missing,
               std::int64_t budget_seconds) {
  std::vector<WitnessPair> witnesses;
  if (witness_file.empty()) {
    witnesses = known_witness_pairs();
  } else {
    std::ifstream is(witness_file);
    if (!is) throw std::runtime_error("cannot open witness file: " + witness_file);
    witnesses = read_witness_file(is);
  }
  CoverageReport report = theorem_coverage(witnesses);

  if (search_missing && !report.gaps.empty()) {
    // Close each leading gap value g by searching for (k <= g, n >= 2g+3).
    std::vector<WitnessPair> found;
    for (std::int64_t g : report.gaps) {
      bool already = false;
      for (const WitnessPair& w : found) {
        const KRange r = covered_range(w);
        if (g >= r.lo && g <= r.hi) {
          already = true;
          break;
        }
      }
      if (already) continue;
      SearchBudget budget;
      budget.max_seconds = budget_seconds;
      const SearchResult res = find_witness(g, 2 * g + 3, budget);
      std::printf("search k<=%lld n>=%lld: %s k=%lld n=%lld (%s)\n",
                  static_cast<long long>(g), static_cast<long long>(2 * g + 3),
                  res.target_met ? "found" : "target_met=false",
                  static_cast<long long>(res.k_achieved),
                  static_cast<long long>(res.n_achieved), res.best.label.c_str());
      if (res.target_met) {
        found.push_back({res.k_achieved, res.n_achieved, res.best.label});
        witnesses.push_back(found.back());
      }
    }
    report = theorem_coverage(witnesses);
  }

  std::printf("window=[%lld,%lld]\n", static_cast<long long>(report.window_lo),
              static_cast<long long>(report.window_hi));
  for (const auto& [w, r] : report.contributions) {
    std::printf("witness k=%lld n=%lld covers [%lld,%lld]%s%s\n",
                static_cast<long long>(w.k), static_cast<long long>(w.n),
                static_cast<long long>(r.lo), static_cast<long long>(r.hi),
                w.source.empty() ? "" : " source=",
                w.source.empty() ? "" : w.source.c_str());
  }
  if (report.gaps.empty()) {
    std::printf("gaps=none\n");
    return kExitOk;
  }
  std::printf("gaps=");
  for (std::size_t i = 0; i < report.gaps.size(); ++i) {
    std::printf("%s%lld", i ? "," : "",
                static_cast<long long>(report.gaps[i]));
  }
  std::printf("\n");
  return kExitTargetNotMet;
}

int run_search(std::int64_t k, std::int64_t n_min, std::int64_t budget_seconds,
               std::uint64_t seed, const std::string& out) {
  SearchBudget budget;
  budget.max_seconds = budget_seconds;
  budget.seed = seed;
  const SearchResult res = find_witness(k, n_min, budget);
  std::printf("target: k<=%lld n>=%lld seed=%llu\n", static_cast<long long>(k),
              static_cast<long long>(n_min),
              static_cast<unsigned long long>(seed));
  for (const TraceEntry& t : res.trace) {
    std::printf("tried %s: k=%lld n=%lld\n", t.strategy.c_str(),
                static_cast<long long>(t.k), static_cast<long long>(t.n));
  }
  std::printf("best: k=%lld n=%lld label=%s target_met=%s\n",
              static_cast<long long>(res.k_achieved),
              static_cast<long long>(res.n_achieved), res.best.label.c_str(),
              res.target_met ? "true" : "false");
  if (!out.empty() && res.n_achieved > 0) {
    std::ostringstream os;
    write_configuration(os, res.best,
                        {"k = " + std::to_string(res.k_achieved),
                         "n = " + std::to_string(res.n_achieved)});
    write_text(out, os.str());
  }
  return res.target_met ? kExitOk : kExitTargetNotMet;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distinct-distance counts, sieves and table reproduction "
               "for planar lattice configurations"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Cap worker threads (0 = all cores)");

  auto* gen = app.add_subcommand("gen", "Generate a configuration file");
  std::string gen_family;
  int gen_s = 0;
  double gen_sq_radius = 0.0;
  std::string gen_out;
  gen->add_option("--family", gen_family, "hex|square|tri-disk|sq-disk")
      ->required()
      ->check(CLI::IsMember({"hex", "square", "tri-disk", "sq-disk"}));
  gen->add_option("--s", gen_s, "Array size parameter");
  gen->add_option("--sq-radius", gen_sq_radius, "Disk squared radius");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  auto* count = app.add_subcommand("count", "Count distinct distances of a file");
  std::string count_in;
  bool count_list = false;
  count->add_option("--in", count_in, "Configuration file")->required();
  count->add_flag("--list", count_list, "Also print the squared distances");

  auto* t1 = app.add_subcommand("table1", "Hexagon and square array table");
  int t1_hex_max = kTable1HexMaxDefault;
  int t1_sq_max = kTable1SquareMaxDefault;
  std::string t1_format = "csv";
  t1->add_option("--hex-max", t1_hex_max, "Largest hexagon size s");
  t1->add_option("--sq-max", t1_sq_max, "Largest square size s");
  t1->add_option("--format", t1_format, "csv|markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));

  auto* t2 = app.add_subcommand("table2", "Large-s four-family comparison table");
  int t2_rows = kTable2RowsDefault;
  std::string t2_format = "csv";
  bool t2_exact = false;
  t2->add_option("--rows", t2_rows, "Number of rows");
  t2->add_option("--format", t2_format, "csv|markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  t2->add_flag("--exact-disks", t2_exact,
               "Exact pairwise disk counts instead of the sieve overestimate");

  auto* cons = app.add_subcommand("constants", "Euler-product constants");
  std::int64_t prime_bound = 1000000;
  cons->add_option("--prime-bound", prime_bound, "Partial-product prime bound")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-theorem",
                                    "Witness coverage of the window [7, 62]");
  std::string verify_witnesses;
  bool verify_search = false;
  std::int64_t verify_budget = 600;
  verify->add_option("--witnesses", verify_witnesses, "Witness list file");
  verify->add_flag("--search-missing", verify_search,
                   "Search for witnesses closing coverage gaps");
  verify->add_option("--budget-seconds", verify_budget, "Per-gap search budget");

  auto* search = app.add_subcommand("search", "Find a witness configuration");
  std::int64_t search_k = 0, search_n_min = 0, search_budget = 600;
  std::uint64_t search_seed = 0;
  std::string search_out;
  search->add_option("--k", search_k, "Distinct-distance target")->required();
  search->add_option("--n-min", search_n_min, "Minimum point count")->required();
  search->add_option("--budget-seconds", search_budget, "Time budget");
  search->add_option("--seed", search_seed, "Seed (recorded; search is "
                     "deterministic)");
  search->add_option("--out", search_out, "Write the best configuration here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const TableFormat t1_fmt =
      t1_format == "csv" ? TableFormat::Csv : TableFormat::Markdown;
  const TableFormat t2_fmt =
      t2_format == "csv" ? TableFormat::Csv : TableFormat::Markdown;

  try {
    if (gen->parsed()) return run_gen(gen_family, gen_s, gen_sq_radius, gen_out);
    if (count->parsed()) return run_count(count_in, count_list);
    if (t1->parsed()) {
      std::cout << emit(table1(t1_hex_max, t1_sq_max), t1_fmt);
      return kExitOk;
    }
    if (t2->parsed()) {
      std::cout << emit(table2(t2_rows, t2_exact, threads), t2_fmt);
      return kExitOk;
    }
    if (cons->parsed()) return run_constants(prime_bound);
    if (verify->parsed())
      return run_verify(verify_witnesses, verify_search, verify_budget);
    if (search->parsed())
      return run_search(search_k, search_n_min, search_budget, search_seed,
                        search_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceGuard;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceGuard;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}

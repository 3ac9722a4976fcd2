#include "josephus/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace josephus {

std::vector<std::int64_t> geometric_sizes(std::int64_t start, std::int64_t factor,
                                          std::int64_t count) {
  if (start < 1) throw InvalidInput("bench start size must be >= 1");
  if (factor < 2) throw InvalidInput("bench factor must be >= 2");
  if (count < 1) throw InvalidInput("bench count must be >= 1");
  std::vector<std::int64_t> sizes{start};
  for (std::int64_t i = 1; i < count; ++i) {
    if (sizes.back() > (std::int64_t{1} << 40) / factor)
      throw InvalidInput("bench series grows past 2^40 prisoners");
    sizes.push_back(sizes.back() * factor);
  }
  return sizes;
}

std::vector<BenchRow> run_bench(const std::vector<std::int64_t>& sizes, std::int64_t m,
                                const std::vector<Algorithm>& algorithms, bool measure_wall) {
  std::vector<BenchRow> rows;
  for (Algorithm a : algorithms) {
    if (a == Algorithm::closed_form && m != 2) continue;
    std::optional<std::uint64_t> previous;
    for (std::int64_t n : sizes) {
      Problem p(n, m);
      OpCounter ops;
      auto t0 = std::chrono::steady_clock::now();
      solve(a, p, &ops);
      auto t1 = std::chrono::steady_clock::now();
      BenchRow row{a, n, m, ops.ops, std::nullopt, std::nullopt};
      if (previous && *previous > 0)
        row.ratio = static_cast<double>(ops.ops) / static_cast<double>(*previous);
      if (measure_wall)
        row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      previous = ops.ops;
      rows.push_back(row);
    }
  }
  return rows;
}

namespace {

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

std::string bench_csv(const std::vector<BenchRow>& rows) {
  bool wall = false;
  for (const auto& r : rows) wall = wall || r.wall_ms.has_value();
  std::ostringstream os;
  os << "algorithm,n,m,ops,ratio";
  if (wall) os << ",wall_ms";
  os << '\n';
  for (const auto& r : rows) {
    os << algorithm_name(r.algorithm) << ',' << r.n << ',' << r.m << ',' << r.ops << ','
       << (r.ratio ? fixed(*r.ratio, 4) : "");
    if (wall) os << ',' << (r.wall_ms ? fixed(*r.wall_ms, 3) : "");
    os << '\n';
  }
  return os.str();
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  bool wall = false;
  for (const auto& r : rows) wall = wall || r.wall_ms.has_value();
  std::ostringstream os;
  os << std::left << std::setw(16) << "algorithm" << std::right << std::setw(10) << "n"
     << std::setw(6) << "m" << std::setw(16) << "ops" << std::setw(9) << "ratio";
  if (wall) os << std::setw(12) << "wall_ms";
  os << '\n';
  for (const auto& r : rows) {
    os << std::left << std::setw(16) << algorithm_name(r.algorithm) << std::right
       << std::setw(10) << r.n << std::setw(6) << r.m << std::setw(16) << r.ops << std::setw(9)
       << (r.ratio ? fixed(*r.ratio, 3) : "-");
    if (wall) os << std::setw(12) << (r.wall_ms ? fixed(*r.wall_ms, 3) : "-");
    os << '\n';
  }
  return os.str();
}

}  // namespace josephus

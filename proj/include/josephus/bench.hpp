#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "josephus/solvers.hpp"

namespace josephus {

struct BenchRow {
  Algorithm algorithm;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::uint64_t ops = 0;
  std::optional<double> ratio;    // ops / ops at the previous size, same algorithm
  std::optional<double> wall_ms;  // only with measure_wall
};

// start, start*factor, ... (count terms). Throws InvalidInput on a bad series.
std::vector<std::int64_t> geometric_sizes(std::int64_t start, std::int64_t factor,
                                          std::int64_t count);

// Rows grouped by algorithm, sizes ascending. closed_form is skipped unless m = 2.
std::vector<BenchRow> run_bench(const std::vector<std::int64_t>& sizes, std::int64_t m,
                                const std::vector<Algorithm>& algorithms,
                                bool measure_wall = false);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace josephus

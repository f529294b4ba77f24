// Times each OpenMP kernel against its serial reference and checks that
// both produce identical results.
//
//   bench_kernels [--max N] [--repeat R]

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "extschur/ext.hpp"
#include "extschur/linalg.hpp"

using namespace extschur;

namespace {

double best_of(int repeat, const std::function<void()>& body) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "match" : "MISMATCH");
}

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

bool same_reports(const std::vector<ExtReport>& a, const std::vector<ExtReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].query != b[i].query || a[i].closed != b[i].closed ||
        a[i].oracles != b[i].oracles || a[i].agree != b[i].agree)
      return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel timings"};
  int max_size = 4;
  int repeat = 3;
  app.add_option("--max", max_size, "table size for the verify_range benchmark");
  app.add_option("--repeat", repeat, "repetitions per measurement (best is reported)");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  {
    const RationalMatrix m = random_matrix(60, 90, 7);
    Echelon serial, parallel;
    const double ts = best_of(repeat, [&] { serial = row_reduce_serial(m); });
    const double tp = best_of(repeat, [&] { parallel = row_reduce(m); });
    row("row_reduce 60x90", ts, tp,
        serial.reduced == parallel.reduced && serial.pivots == parallel.pivots);
  }

  for (auto [kind, n, m, name] :
       {std::tuple{Bimodule::catlie, 6, 5, "catlie character (6,5)"},
        std::tuple{Bimodule::upward_brauer, 4, 6, "ub character (4,6)"}}) {
    BimoduleCharacter serial, parallel;
    const double ts = best_of(repeat, [&] { serial = bimodule_character_serial(kind, n, m); });
    const double tp = best_of(1, [&] { parallel = bimodule_character(kind, n, m); });
    row(name, ts, tp, serial.trace == parallel.trace);
  }

  {
    std::vector<ExtReport> serial, parallel;
    const double ts = best_of(repeat, [&] { serial = verify_range_serial(max_size); });
    const double tp = best_of(repeat, [&] { parallel = verify_range(max_size); });
    const std::string name = "verify_range max " + std::to_string(max_size);
    row(name.c_str(), ts, tp, same_reports(serial, parallel));
  }
  return 0;
}

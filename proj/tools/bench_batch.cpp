// Benchmark of the OpenMP batch kernels against the serial reference path.
// Both paths run the same body; the serial results double as the expected
// output, so this also asserts they agree before timing is reported.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "paracoh/batch.hpp"
#include "paracoh/catalog.hpp"
#include "paracoh/deform.hpp"
#include "paracoh/randomcheck.hpp"

using namespace paracoh;

namespace {

double run_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool rows_equal(const std::vector<ScanRow>& a, const std::vector<ScanRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].t_label() != b[i].t_label() || a[i].dim_plus != b[i].dim_plus ||
        a[i].dim_minus != b[i].dim_minus || a[i].betti != b[i].betti) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  int threads = batch::thread_cap();
  std::printf("batch benchmark (serial reference vs OpenMP, %d workers)\n", threads);
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  {
    const CatalogEntry& entry = catalog_get("jump-sci");
    DeformationFamily fam = entry.family("K_t");
    std::vector<Rational> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(Rational(i, 41));
    std::vector<ScanRow> serial_rows, omp_rows;
    double serial = run_ms([&] { serial_rows = sample_scan(fam, ts, 2, 1); });
    double omp = run_ms([&] { omp_rows = sample_scan(fam, ts, 2, threads); });
    if (!rows_equal(serial_rows, omp_rows)) {
      std::fprintf(stderr, "FAIL: parallel scan differs from serial reference\n");
      return 1;
    }
    std::printf("%-34s %10.1f %10.1f %7.2fx\n", "deform scan (41 points, dim 6)", serial, omp,
                serial / omp);
  }

  {
    LieAlgebra g = catalog_get("filiform4").algebra();
    RandomCheckOutcome serial_out, omp_out;
    double serial = run_ms([&] { serial_out = random_check_4dim(g, 60, 42, 20000, 1); });
    double omp = run_ms([&] { omp_out = random_check_4dim(g, 60, 42, 20000, threads); });
    if (serial_out.abelian_count != omp_out.abelian_count ||
        serial_out.counterexamples != omp_out.counterexamples) {
      std::fprintf(stderr, "FAIL: parallel random-check differs from serial reference\n");
      return 1;
    }
    std::printf("%-34s %10.1f %10.1f %7.2fx\n", "random-check (60 trials, filiform)", serial, omp,
                serial / omp);
  }

  return 0;
}

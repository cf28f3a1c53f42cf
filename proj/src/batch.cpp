#include "paracoh/batch.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace paracoh::batch {

int thread_cap() {
#ifdef _OPENMP
  int cap = omp_get_max_threads();
#else
  int cap = 1;
#endif
  if (const char* env = std::getenv("PARACOH_THREADS")) {
    try {
      int requested = std::stoi(env);
      if (requested >= 1 && requested < cap) cap = requested;
    } catch (...) {
      // unparsable value: keep the default
    }
  }
  return cap;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (index * 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace detail {

void parallel_region(int count, int threads, void* ctx, void (*body)(void*, int)) {
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < count; ++i) body(ctx, i);
    return;
  }
#else
  (void)threads;
#endif
  for (int i = 0; i < count; ++i) body(ctx, i);
}

}  // namespace detail

}  // namespace paracoh::batch

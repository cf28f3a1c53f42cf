#pragma once

#include <cstdint>
#include <vector>

namespace paracoh::batch {

/// Worker cap: PARACOH_THREADS when set (min 1), otherwise the OpenMP
/// default; 1 when built without OpenMP.
int thread_cap();

/// Derives an independent per-index seed stream from a base seed (splitmix64
/// over seed xor golden-ratio-scaled index), so parallel trials are
/// reproducible regardless of scheduling.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

namespace detail {
void parallel_region(int count, int threads, void* ctx, void (*body)(void*, int));
}

/// results[i] = fn(i); the OpenMP kernel and the serial reference path share
/// the body, and tests assert their outputs are identical. Writes go to
/// distinct slots, so ordering is deterministic by index.
template <class T, class Fn>
std::vector<T> map_indexed(int count, int threads, Fn&& fn) {
  std::vector<T> out(static_cast<std::size_t>(count));
  struct Ctx {
    std::vector<T>* out;
    Fn* fn;
  } ctx{&out, &fn};
  detail::parallel_region(count, threads, &ctx, [](void* p, int i) {
    Ctx* c = static_cast<Ctx*>(p);
    (*c->out)[static_cast<std::size_t>(i)] = (*c->fn)(i);
  });
  return out;
}

}  // namespace paracoh::batch

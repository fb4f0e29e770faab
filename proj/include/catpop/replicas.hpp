#pragma once

#include <cstdint>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "catpop/rng.hpp"

namespace catpop {

// Replica stream ids start here; low ids stay free for single trajectories
// and auxiliary draws inside one experiment.
inline constexpr std::uint64_t kReplicaStreamBase = 1ULL << 32;

// Reference implementation: replica i runs on RngStream(seed, first_stream+i)
// and its result lands at index i.
template <class Body>
auto run_replicas_serial(std::size_t replicas, std::uint64_t seed,
                         std::uint64_t first_stream, Body&& body) {
  using T = std::invoke_result_t<Body&, std::size_t, RngStream&>;
  std::vector<T> out(replicas);
  for (std::size_t i = 0; i < replicas; ++i) {
    RngStream rng(seed, first_stream + i);
    out[i] = body(i, rng);
  }
  return out;
}

// OpenMP-parallel version. Replicas are independent by construction and the
// output is keyed by replica index, so any thread count gives the same
// vector as run_replicas_serial. threads <= 0 means the OpenMP default.
template <class Body>
auto run_replicas(std::size_t replicas, std::uint64_t seed,
                  std::uint64_t first_stream, int threads, Body&& body) {
  using T = std::invoke_result_t<Body&, std::size_t, RngStream&>;
  if (threads == 1 || replicas < 2) {
    return run_replicas_serial(replicas, seed, first_stream, body);
  }
  std::vector<T> out(replicas);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads( \
    threads > 0 ? threads : omp_get_max_threads())
  for (long long i = 0; i < static_cast<long long>(replicas); ++i) {
    RngStream rng(seed, first_stream + static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] = body(static_cast<std::size_t>(i), rng);
  }
#else
  for (std::size_t i = 0; i < replicas; ++i) {
    RngStream rng(seed, first_stream + i);
    out[i] = body(i, rng);
  }
#endif
  return out;
}

}  // namespace catpop

#pragma once

#include <cstdint>

namespace naqc {

/// Selects between the OpenMP kernels and their serial reference implementations.
/// Both produce bit-identical results: work items carry their own derived seeds
/// and reductions run in index order.
enum class Execution { Serial, Parallel };

/// Number of threads the parallel kernels would use (1 without OpenMP).
int parallel_thread_count() noexcept;

/// splitmix64 finalizer applied to (base + stream). Used to derive independent
/// per-row seeds from one user seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

} // namespace naqc

#pragma once

namespace quermass {

/// Caps OpenMP parallelism to the QUERMASS_THREADS environment variable
/// when it is set to a positive integer. No-op in serial builds.
void apply_thread_cap_from_env();

/// Number of threads the parallel kernels will use.
int active_thread_count();

}  // namespace quermass

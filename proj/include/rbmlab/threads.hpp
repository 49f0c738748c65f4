#pragma once

namespace rbmlab {

// Number of threads the parallel kernels may use. Defaults to the OpenMP
// maximum, capped by the RBMLAB_THREADS environment variable when set.
int max_threads();

// Programmatic cap, overriding the environment. 0 removes the override.
void set_thread_cap(int n);

}  // namespace rbmlab

#pragma once

namespace qes {

// Applies the QES_THREADS environment variable to the OpenMP runtime.
// Unset, empty, 0, or unparsable means automatic. No-op in serial builds.
void init_threads_from_env();

// Worker count the parallel regions will use (1 in serial builds).
int thread_count();

}  // namespace qes

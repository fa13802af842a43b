#include "qes/threads.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qes {

void init_threads_from_env() {
#ifdef _OPENMP
  const char* text = std::getenv("QES_THREADS");
  if (!text || !*text) return;
  char* end = nullptr;
  const long count = std::strtol(text, &end, 10);
  if (end == text || *end != '\0' || count <= 0) return;  // 0 or garbage: automatic
  omp_set_num_threads(static_cast<int>(count));
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qes

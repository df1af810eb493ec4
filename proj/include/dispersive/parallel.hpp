#pragma once

// Parallel-for over independent output points. Expands to nothing when the
// library is built without OpenMP.
#ifdef _OPENMP
#include <omp.h>
#define DISPERSIVE_OMP_PARALLEL_FOR _Pragma("omp parallel for schedule(static)")
#else
#define DISPERSIVE_OMP_PARALLEL_FOR
#endif

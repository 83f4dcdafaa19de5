#include <omp.h>

#include "connsets/oracle_kernels.hpp"

namespace connsets::kernels {

Count count_connected_omp(const PackedGraph& pg, int workers) {
  const std::uint64_t limit = std::uint64_t{1} << pg.free_bits;
  const std::uint64_t first = pg.required ? 0 : 1;
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  Count total = 0;
#pragma omp parallel for num_threads(threads) schedule(static, 4096) reduction(+ : total)
  for (std::uint64_t i = first; i < limit; ++i)
    if (connected_mask(pg, i | pg.required)) ++total;
  return total;
}

}  // namespace connsets::kernels

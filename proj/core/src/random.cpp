#include "graphdiffuse/random.hpp"

#include <algorithm>
#include <numeric>

#include "graphdiffuse/error.hpp"

namespace graphdiffuse {

std::vector<std::size_t> sample_without_replacement(std::mt19937_64& engine, std::size_t n,
                                                    std::size_t k) {
  if (k > n) throw DomainError("cannot sample more elements than available");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  // Partial Fisher-Yates from the front.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_index(engine, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace graphdiffuse

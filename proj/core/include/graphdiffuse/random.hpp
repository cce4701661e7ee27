#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace graphdiffuse {

// The standard distributions are implementation-defined, so seeded output would
// differ between standard libraries. These draw directly from the engine.

inline double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_index(std::mt19937_64& engine, std::size_t bound) {
  return static_cast<std::size_t>(engine() % static_cast<std::uint64_t>(bound));
}

// k distinct values from [0, n), sorted ascending.
std::vector<std::size_t> sample_without_replacement(std::mt19937_64& engine, std::size_t n,
                                                    std::size_t k);

}  // namespace graphdiffuse

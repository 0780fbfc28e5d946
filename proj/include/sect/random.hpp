#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sect {

// The standard distributions are implementation-defined; these depend only
// on the engine's output sequence, so seeded results match across
// standard libraries.

/// Uniform draw from [0, n) by rejection. Throws InvalidInput for n = 0.
std::uint64_t draw_below(std::uint64_t n, std::mt19937_64& rng);

/// Uniform double in [0, 1) with 53 random bits.
double draw_unit(std::mt19937_64& rng);

/// Standard normal by the Box-Muller transform (one value per two draws).
double draw_normal(std::mt19937_64& rng);

/// `k` distinct indices from [0, n), ascending (partial Fisher-Yates).
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::mt19937_64& rng);

/// Uniform random permutation of [0, n).
std::vector<std::size_t> permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace sect

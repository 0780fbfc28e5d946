#include "sect/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sect/error.hpp"

namespace sect {

std::uint64_t draw_below(std::uint64_t n, std::mt19937_64& rng) {
    if (n == 0) throw InvalidInput("draw_below(0)");
    // [threshold, 2^64) holds a whole number of blocks of n.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double draw_normal(std::mt19937_64& rng) {
    double u1 = 1.0 - draw_unit(rng);  // (0, 1]
    double u2 = draw_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    if (k > n) throw InvalidInput("cannot sample more items than exist");
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + draw_below(n - i, rng)]);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<std::size_t> permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i + 1 < n; ++i) std::swap(idx[i], idx[i + draw_below(n - i, rng)]);
    return idx;
}

}  // namespace sect

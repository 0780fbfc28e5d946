#pragma once

// Synthetic causal frames with a known effect, and a least-squares oracle
// that shares no code with the estimator.

#include <cmath>
#include <cstdint>
#include <vector>

#include "sect/causal/causal.hpp"
#include "sect/random.hpp"

namespace sect::testing {

/// Two standard-normal confounders drive both treatment and outcome:
///   T = [0.8 z1 + 0.5 z2 + u > 0],  Y = effect T + 1.5 z1 - 0.7 z2 + noise e.
inline causal::Frame confounded_frame(std::size_t n, double effect, std::uint64_t seed, double noise = 1.0) {
    std::mt19937_64 rng(seed);
    causal::Frame f;
    f.z.resize(static_cast<Eigen::Index>(n), 2);
    f.z_names = {"z1", "z2"};
    for (std::size_t i = 0; i < n; ++i) {
        double z1 = draw_normal(rng), z2 = draw_normal(rng), u = draw_normal(rng), e = draw_normal(rng);
        double t = 0.8 * z1 + 0.5 * z2 + u > 0 ? 1.0 : 0.0;
        f.t.push_back(t);
        f.y.push_back(effect * t + 1.5 * z1 - 0.7 * z2 + noise * e);
        f.z(static_cast<Eigen::Index>(i), 0) = z1;
        f.z(static_cast<Eigen::Index>(i), 1) = z2;
    }
    return f;
}

/// Coefficients of Y ~ 1 + T + Z from the normal equations, solved by
/// Gaussian elimination with partial pivoting.
inline std::vector<double> normal_equations(const causal::Frame& f) {
    const std::size_t n = f.t.size(), p = 2 + static_cast<std::size_t>(f.z.cols());
    auto x = [&](std::size_t i, std::size_t j) {
        if (j == 0) return 1.0;
        if (j == 1) return f.t[i];
        return f.z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j - 2));
    };
    std::vector<std::vector<double>> a(p, std::vector<double>(p + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < p; ++r) {
            for (std::size_t c = 0; c < p; ++c) a[r][c] += x(i, r) * x(i, c);
            a[r][p] += x(i, r) * f.y[i];
        }
    }
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < p; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        std::swap(a[col], a[piv]);
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            double m = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= p; ++c) a[r][c] -= m * a[col][c];
        }
    }
    std::vector<double> beta(p);
    for (std::size_t r = 0; r < p; ++r) beta[r] = a[r][p] / a[r][r];
    return beta;
}

}  // namespace sect::testing

// SPDX-License-Identifier: Apache-2.0

#ifndef EIGENBOUND_SWEEP_HPP
#define EIGENBOUND_SWEEP_HPP

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eigenbound {

/// Least-squares line through (ln x, ln y), used to turn every "scales like
/// x^p up to constants" claim into a measured exponent.
struct SlopeFit {
    std::vector<std::pair<double, double>> points;
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
};

inline SlopeFit fit_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::domain_error("degenerate: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        if (x <= 0.0 || y <= 0.0) throw std::domain_error("degenerate: points must be positive");
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = double(points.size());
    const double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-14 * (n * sxx + sx * sx + 1.0))
        throw std::domain_error("degenerate: all abscissae equal");
    SlopeFit f;
    f.points = points;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    for (const auto& [x, y] : points)
        f.max_residual =
            std::max(f.max_residual, std::abs(std::log(y) - (f.slope * std::log(x) + f.intercept)));
    return f;
}

/// Smallest constant making every pair lhs <= c * rhs_unit pass.
struct FittedConstant {
    double value = 0.0;
    int sweep_size = 0;
};

inline FittedConstant fit_constant(const std::vector<std::pair<double, double>>& lhs_rhs_unit) {
    FittedConstant c;
    for (const auto& [lhs, unit] : lhs_rhs_unit) {
        if (unit <= 0.0) throw std::domain_error("degenerate: rhs unit must be positive");
        c.value = std::max(c.value, lhs / unit);
        ++c.sweep_size;
    }
    return c;
}

/// Divides each ordinate by |ln x|^power; requires x < 1 so that ln(1/x) > 0.
inline std::vector<std::pair<double, double>>
log_correct(std::vector<std::pair<double, double>> points, double power) {
    for (auto& [x, y] : points) {
        if (x >= 1.0) throw std::domain_error("domain: log correction needs x < 1");
        y /= std::pow(std::abs(std::log(x)), power);
    }
    return points;
}

} // namespace eigenbound

#endif

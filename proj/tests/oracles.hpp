// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, independent of the library's evaluation paths.

#ifndef EIGENBOUND_TEST_ORACLES_HPP
#define EIGENBOUND_TEST_ORACLES_HPP

#include <cmath>
#include <complex>

#include "eigenbound/quadrature.hpp"
#include "eigenbound/types.hpp"

namespace oracles {

using eigenbound::Complex;
using eigenbound::pi;

// Reference values computed with mpmath at 30 significant digits.
inline constexpr double j0_at_1 = 0.765197686557966551449717526103;
inline constexpr double y0_at_1 = 0.0882569642156769579829267660235;
inline constexpr double h0_at_10_re = -0.245935764451348335197760862485;
inline constexpr double h0_at_10_im = 0.0556711672835993914244598774102;
inline constexpr double k0_at_1 = 0.421024438240708333335627379213;
inline constexpr double k0_at_2 = 0.113893872749533435652719574932;
// kernel of (-Delta + 1)^{-3/2} in d = 3 at r = 1: K0(1)/(2 pi^2)
inline constexpr double bessel_potential_d3_r1 = 0.0213293472124494532372359780247;

/// Macdonald K0(t) for real t > 0 by the Laplace integral
/// \int_0^inf e^{-t cosh u} du on a trapezoidal grid.
inline double k0_quadrature(double t) {
    const double U = std::acosh(1.0 + 46.0 / t);
    const int n = 4000;
    const double h = U / n;
    double s = 0.5 * (std::exp(-t) + std::exp(-t * std::cosh(U)));
    for (int k = 1; k < n; ++k) s += std::exp(-t * std::cosh(k * h));
    return s * h;
}

/// d = 3 kernel of (-Delta - z)^{-zeta} at z = -mu^2 < 0 by direct quadrature
/// of the radial Fourier integral
///   (1/(2 pi^2 r)) \int_0^inf rho sin(rho r) (rho^2 + mu^2)^{-zeta} drho,
/// summed over half-periods with repeated averaging to tame the oscillation.
inline double fourier_kernel_oracle_d3(double mu, double zeta, double r) {
    auto chunk = [&](int k) {
        const double a = k * pi / r, b = (k + 1) * pi / r;
        const eigenbound::Rule1D g = eigenbound::gauss_legendre_on(a, b, 32);
        double s = 0.0;
        for (int i = 0; i < 32; ++i)
            s += g.w[i] * g.x[i] * std::sin(g.x[i] * r) *
                 std::pow(g.x[i] * g.x[i] + mu * mu, -zeta);
        return s;
    };
    // Euler transformation of the alternating tail
    const int nc = 60;
    std::vector<double> partial(nc);
    double acc = 0.0;
    for (int k = 0; k < nc; ++k) {
        acc += chunk(k);
        partial[k] = acc;
    }
    for (int level = 0; level < nc - 1; ++level)
        for (int k = 0; k + 1 < nc - level; ++k) partial[k] = 0.5 * (partial[k] + partial[k + 1]);
    return partial[0] / (2.0 * pi * pi * r);
}

/// Even bound state of the real 1D well V = -|V0| on [-R, R]: solves
/// k tan(k R) = kappa with k = sqrt(|V0| - kappa^2) by bisection and returns
/// the eigenvalue E = -kappa^2.
inline double real_well_even_eigenvalue_1d(double depth, double R) {
    auto f = [&](double kap) {
        const double k = std::sqrt(depth - kap * kap);
        return k * std::tan(k * R) - kap;
    };
    double lo = 1e-9, hi = std::sqrt(depth) - 1e-9;
    // restrict to the first branch: k R < pi/2
    const double kmin = std::sqrt(std::max(0.0, depth - std::pow(0.5 * pi / R, 2.0)));
    lo = std::max(lo, kmin + 1e-12);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(lo) * f(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    const double kap = 0.5 * (lo + hi);
    return -kap * kap;
}

/// Lowest s-wave bound state of the 3D well V = -|V0| on {r <= R}: solves
/// k cot(k R) = -kappa, returns E = -kappa^2.
inline double real_well_swave_eigenvalue_3d(double depth, double R) {
    auto f = [&](double kap) {
        const double k = std::sqrt(depth - kap * kap);
        return k / std::tan(k * R) + kap;
    };
    double lo = 1e-9, hi = std::sqrt(depth) - 1e-9;
    const double kmin = std::sqrt(std::max(0.0, depth - std::pow(pi / R, 2.0)));
    lo = std::max(lo, kmin + 1e-12);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(lo) * f(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    const double kap = 0.5 * (lo + hi);
    return -kap * kap;
}

} // namespace oracles

#endif

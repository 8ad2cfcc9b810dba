// SPDX-License-Identifier: Apache-2.0

#ifndef EIGENBOUND_KERNELS_HPP
#define EIGENBOUND_KERNELS_HPP

#include <cmath>
#include <stdexcept>

#include "eigenbound/special.hpp"
#include "eigenbound/types.hpp"

namespace eigenbound {

/// Query for the fractional-resolvent kernel bound: dimension, real resolvent
/// power zeta in [d/2, (d+1)/2], and the distance r = |x-y|.
struct KernelQuery {
    int d;
    double zeta;
    double r;

    KernelQuery(int d_, double zeta_, double r_) : d(d_), zeta(zeta_), r(r_) {
        if (d < 1 || d > 3) throw std::domain_error("dimension: d must be 1, 2 or 3");
        // the plain resolvent power zeta = 1 is admitted in every dimension;
        // it satisfies the same closed-form bound even below d/2
        if (zeta < std::min(1.0, 0.5 * d) - 1e-12 || zeta > 0.5 * (d + 1) + 1e-12)
            throw std::domain_error("domain: zeta outside [min(1, d/2), (d+1)/2]");
        if (d >= 2 ? r <= 0.0 : r < 0.0)
            throw std::domain_error("domain: r must be positive (nonnegative for d = 1)");
    }
};

/// Kernel of (-Delta - E)^{-1} at distance r, for E off [0, inf).
///
///   d = 1:  i e^{i kappa r} / (2 kappa)
///   d = 2:  (i/4) H0^(1)(kappa r)
///   d = 3:  e^{i kappa r} / (4 pi r)
inline Complex free_resolvent_kernel(const SpectralPoint& sp, double r) {
    if (!on_positive_axis(sp.E) && sp.kappa.imag() <= 0.0)
        throw std::domain_error("branch: Im kappa must be positive off [0,inf)");
    if (on_positive_axis(sp.E))
        throw std::domain_error("branch: E on [0,inf) is outside the resolvent set");
    const Complex i(0.0, 1.0);
    switch (sp.d) {
    case 1:
        return i * std::exp(i * sp.kappa * r) / (2.0 * sp.kappa);
    case 2:
        if (r <= 0.0) throw std::domain_error("domain: r = 0 is singular for d = 2");
        return 0.25 * i * hankel0_h1(sp.kappa * r);
    case 3:
        if (r <= 0.0) throw std::domain_error("domain: r = 0 is singular for d = 3");
        return std::exp(i * sp.kappa * r) / (4.0 * pi * r);
    default:
        throw std::domain_error("dimension: d must be 1, 2 or 3");
    }
}

/// Kernel of (-Delta - E)^{-zeta} in d = 3 for the closed-form powers.
///
///   zeta = 1:    the free kernel
///   zeta = 2:    i e^{i kappa r} / (8 pi kappa), the E-derivative of zeta = 1
///   zeta = 3/2:  K_0(-i kappa r)/(2 pi^2) = (i/(4 pi)) H0^(1)(kappa r)
inline Complex fractional_kernel_d3(const SpectralPoint& sp, double zeta, double r) {
    if (sp.d != 3) throw std::domain_error("dimension: fractional kernel requires d = 3");
    if (r <= 0.0) throw std::domain_error("domain: r must be positive");
    const Complex i(0.0, 1.0);
    if (std::abs(zeta - 1.0) < 1e-12) return free_resolvent_kernel(sp, r);
    if (std::abs(zeta - 2.0) < 1e-12)
        return i * std::exp(i * sp.kappa * r) / (8.0 * pi * sp.kappa);
    if (std::abs(zeta - 1.5) < 1e-12)
        return 0.25 * i / pi * hankel0_h1(sp.kappa * r);
    throw std::domain_error("unsupported: zeta must be 1, 3/2 or 2");
}

/// Right-hand side of the pointwise kernel bound at |E| = 1:
///   C e^{-Im kappa r} r^{-(d+1)/2 + zeta}.
inline double pointwise_bound_rhs(const SpectralPoint& sp, double zeta, double r, double C) {
    if (std::abs(std::abs(sp.E) - 1.0) > 1e-12)
        throw std::domain_error("domain: pointwise bound is stated on |E| = 1");
    KernelQuery q(sp.d, zeta, r); // validates ranges
    return C * std::exp(-sp.kappa.imag() * r) * std::pow(r, -0.5 * (sp.d + 1) + zeta);
}

} // namespace eigenbound

#endif

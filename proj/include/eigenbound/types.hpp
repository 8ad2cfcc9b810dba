// SPDX-License-Identifier: Apache-2.0

#ifndef EIGENBOUND_TYPES_HPP
#define EIGENBOUND_TYPES_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace eigenbound {

using Real = double;
using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Point in R^d, d <= 3. Unused trailing coordinates are zero.
using Point = std::array<double, 3>;

inline Point make_point(double x0, double x1 = 0.0, double x2 = 0.0) {
    return {x0, x1, x2};
}

/// Square root with the branch fixed by Im sqrt(z) >= 0.
///
/// On [0,inf) returns the nonnegative real root (limit from the upper half
/// plane), so the function is total and continuous off the positive real axis.
inline Complex sqrt_upper(Complex E) {
    Complex s = std::sqrt(E); // principal: Re s >= 0
    if (s.imag() < 0.0) s = -s;
    return s;
}

/// Distance from z to the ray [0, inf).
inline double dist_to_ray(Complex z) {
    if (z.real() <= 0.0) return std::abs(z);
    return std::abs(z.imag());
}

/// Spectral parameter E together with its upper-half-plane square root.
struct SpectralPoint {
    Complex E;
    Complex kappa; // kappa^2 = E, Im kappa >= 0
    int d = 1;     // ambient dimension, in {1,2,3}
};

inline SpectralPoint make_spectral_point(Complex E, int d) {
    if (d < 1 || d > 3) throw std::domain_error("dimension: d must be 1, 2 or 3");
    SpectralPoint sp{E, sqrt_upper(E), d};
    const double scale = std::max(std::abs(E), 1e-300);
    if (std::abs(sp.kappa * sp.kappa - E) > 1e-13 * scale)
        throw std::runtime_error("branch: kappa^2 != E beyond tolerance");
    return sp;
}

/// True when E lies on [0, inf), where the resolvent kernel is not defined.
inline bool on_positive_axis(Complex E) {
    return E.imag() == 0.0 && E.real() >= 0.0;
}

} // namespace eigenbound

#endif

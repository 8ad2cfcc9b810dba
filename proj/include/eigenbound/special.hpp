// SPDX-License-Identifier: Apache-2.0

#ifndef EIGENBOUND_SPECIAL_HPP
#define EIGENBOUND_SPECIAL_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "eigenbound/quadrature.hpp"
#include "eigenbound/types.hpp"

namespace eigenbound {

inline constexpr double euler_gamma = 0.57721566490153286061;

/// J0 for complex argument from Bessel's integral
///   J0(z) = (1/pi) \int_0^pi cos(z sin t) dt,
/// by the trapezoidal rule, which is exponentially convergent here. The error
/// is O(J_{2n}(z)), negligible in double precision for |z| <= 30 at n = 64.
inline Complex bessel_j0(Complex z) {
    const int n = 64;
    const double h = pi / n;
    Complex sum = 0.5 * (std::cos(z * std::sin(0.0)) + std::cos(z * std::sin(pi)));
    for (int k = 1; k < n; ++k) sum += std::cos(z * std::sin(k * h));
    return sum * (h / pi);
}

namespace detail {

using ComplexL = std::complex<long double>;

/// H0^(1) by the ascending series of J0 and Y0 (principal log). Accumulated
/// in long double; J0 and iY0 cancel like e^{2|Im w|}, so this route is kept
/// to the sector |Im w| <= |Re w| where the cancellation stays harmless.
inline Complex hankel0_series_jy(Complex w) {
    const ComplexL wl(w.real(), w.imag());
    const ComplexL q = 0.25L * wl * wl;
    ComplexL term(1.0L, 0.0L);
    ComplexL j0 = term;
    ComplexL ysum = 0.0L; // sum (-1)^{k+1} H_k q^k / (k!)^2
    long double harmonic = 0.0L;
    for (int k = 1; k <= 80; ++k) {
        term *= -q / (long double)(k) / (long double)(k);
        harmonic += 1.0L / k;
        j0 += term;
        ysum -= term * harmonic;
        if (std::abs(term) < 1e-22L * (std::abs(j0) + 1.0L) && k > 8) break;
    }
    const long double eg = 0.577215664901532860606512L;
    const ComplexL y0 = (2.0L / (long double)pi) * ((std::log(0.5L * wl) + eg) * j0 + ysum);
    const ComplexL h = j0 + ComplexL(0.0L, 1.0L) * y0;
    return Complex((double)h.real(), (double)h.imag());
}

/// Same function through K0(-i w) = (i pi/2) H0^(1)(w) evaluated by the
/// Laplace integral K0(zeta) = \int_0^inf e^{-zeta cosh u} du. For
/// Im w > |Re w| the argument zeta = -i w satisfies Re zeta >= |zeta|/sqrt(2),
/// the integrand is positive up to a bounded phase, and the trapezoidal sum
/// is accurate to machine precision: this is the sector where every ascending
/// series cancels by e^{2 Im w}.
inline Complex hankel0_k0_integral(Complex w) {
    const Complex zeta = Complex(0.0, -1.0) * w;
    const double re = zeta.real();
    const double U = std::acosh(1.0 + 42.0 / re);
    // resolve the oscillation Im zeta * (cosh u - 1) along the contour
    const double radians = std::abs(zeta.imag()) * 42.0 / re;
    const int n = std::max(256, int(16.0 * radians));
    const double h = U / n;
    Complex sum = 0.5 * (std::exp(-zeta) + std::exp(-zeta * std::cosh(U)));
    for (int k = 1; k < n; ++k) sum += std::exp(-zeta * std::cosh(k * h));
    const Complex k0 = sum * h;
    return Complex(0.0, -2.0 / pi) * k0; // (2/(i pi)) K0
}

inline Complex hankel0_series(Complex w) {
    // the J0/Y0 route cancels like e^{2 Im w}; hand the upper sector past
    // ~30 degrees of elevation to the Laplace integral
    if (w.imag() > 0.577 * std::abs(w.real()) && std::abs(w) >= 4.0)
        return hankel0_k0_integral(w);
    return hankel0_series_jy(w);
}

/// Large-argument branch for Im w >= 0: the Hankel asymptotic form
///   H0^(1)(w) = sqrt(2/(pi w)) e^{i(w - pi/4)} S(w),
/// with S evaluated exactly through its Laplace-type integral
///   S(w) = (1/Gamma(1/2)) \int_0^inf e^{-t} t^{-1/2} (1 + i t/(2w))^{-1/2} dt
/// on a generalized Gauss-Laguerre rule. The integrand stays on the principal
/// branch for arg w in [0, pi]; the rule resolves it to ~1e-13 for |w| >= 8.
inline Complex hankel0_asymptotic_upper(Complex w) {
    const Rule1D& gl = gauss_laguerre(48, -0.5);
    Complex s = 0.0;
    const Complex i2w = Complex(0.0, 0.5) / w;
    for (std::size_t k = 0; k < gl.x.size(); ++k)
        s += gl.w[k] / std::sqrt(1.0 + i2w * gl.x[k]);
    s /= std::sqrt(pi);
    const Complex phase = std::exp(Complex(0.0, 1.0) * w - Complex(0.0, 0.25 * pi));
    return std::sqrt(2.0 / (pi * w)) * phase * s;
}

} // namespace detail

/// Hankel function of the first kind, order zero, for arg w in (-pi, pi].
///
/// Power series for |w| <= 10, asymptotic branch above. In the lower half
/// plane the asymptotic branch goes through H0^(1) = 2 J0 - H0^(2) together
/// with H0^(2)(w) = conj(H0^(1)(conj w)).
inline Complex hankel0_h1(Complex w) {
    if (w == 0.0) throw std::domain_error("domain: hankel0_h1 is singular at w = 0");
    if (std::abs(w) <= 10.0) return detail::hankel0_series(w);
    if (w.imag() >= 0.0) return detail::hankel0_asymptotic_upper(w);
    const Complex h2 = std::conj(detail::hankel0_asymptotic_upper(std::conj(w)));
    return 2.0 * bessel_j0(w) - h2;
}

} // namespace eigenbound

#endif

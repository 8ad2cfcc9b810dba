// SPDX-License-Identifier: Apache-2.0

#ifndef EIGENBOUND_QUASIMODE_HPP
#define EIGENBOUND_QUASIMODE_HPP

#include <cmath>
#include <limits>

#include "eigenbound/potentials.hpp"
#include "eigenbound/types.hpp"

namespace eigenbound {

/// Gaussian quasimode psi(x) = N^{-1/2} e^{i x_1} G(|y|) with
/// y = (eps x_1, sqrt(eps) x'), G(t) = e^{-t^2/2}, N = eps^{-(d+1)/2}.
/// The partnered potential is either eps G(|y|) (chi = gaussian) or the
/// truncated multiplier variant with cutoff |y| <= M.
struct Quasimode {
    double eps = 0.0;
    int d = 2;
    double N = 0.0;
    bool truncated = false;
    double M = std::numeric_limits<double>::infinity();
    double delta = 0.0; // only set for the truncated variant
    Potential V;
};

inline Quasimode gaussian_quasimode(double eps, int d) {
    if (eps <= 0.0 || eps > 0.5) throw std::domain_error("domain: eps must lie in (0, 0.5]");
    if (d < 2 || d > 3) throw std::domain_error("dimension: d must be 2 or 3");
    Quasimode qm;
    qm.eps = eps;
    qm.d = d;
    qm.N = std::pow(eps, -0.5 * (d + 1));
    qm.V = GaussianQuasimodePotential{eps, d};
    return qm;
}

inline Complex quasimode_psi(const Quasimode& qm, const Point& x) {
    const Point y = detail::quasimode_y(x, qm.eps, qm.d);
    const double y2 = y[0] * y[0] + detail::norm_tail(y, qm.d, 1);
    return std::exp(Complex(0.0, x[0])) * std::exp(-0.5 * y2) / std::sqrt(qm.N);
}

/// (-Delta - 1 - i eps) psi at x, through the exact multiplier
///   (eps (d - 1 - |y'|^2 + 2 i y_1 - i) + eps^2 (1 - y_1^2)) psi.
inline Complex residual_analytic(const Quasimode& qm, const Point& x) {
    const Point y = detail::quasimode_y(x, qm.eps, qm.d);
    return -detail::truncated_multiplier(y, qm.eps, qm.d) * quasimode_psi(qm, x);
}

namespace detail {

/// Integrals of radially-reduced densities against e^{-|y|^2}: the common
/// scaffold for every quasimode norm.
template <class F>
double qm_weighted_all(const F& f, int d, double Y) {
    return strip_integral_reduced(
        [&](double y1, double rho) { return f(y1, rho) * std::exp(-(y1 * y1 + rho * rho)); }, Y, Y,
        d, 128);
}

template <class F>
double qm_weighted_disk(const F& f, double M, int d) {
    return disk_integral_reduced(
        [&](double y1, double rho) { return f(y1, rho) * std::exp(-(y1 * y1 + rho * rho)); }, M, d,
        128);
}

} // namespace detail

/// ||psi||_2^2 by quadrature; equals pi^{d/2} for every eps.
inline double psi_l2_squared(const Quasimode& qm) {
    return detail::qm_weighted_all([](double, double) { return 1.0; }, qm.d, 9.0);
}

struct QuasimodeNorms {
    double g2 = 0.0;    // ||(-Delta - 1 - i eps + V) psi||_2
    double Vq = 0.0;    // ||V||_q
    double Vpsi2 = 0.0; // ||V^{1/2} psi||_2
};

inline QuasimodeNorms quasimode_norms(const Quasimode& qm, double q) {
    if (q <= 0.5 * (qm.d + 1)) throw std::domain_error("range: q must exceed (d+1)/2");
    QuasimodeNorms out;
    const double e = qm.eps;
    const int d = qm.d;
    if (!qm.truncated) {
        auto gdens = [&](double y1, double rho) {
            Point y{y1, rho, 0};
            const Complex mult = detail::truncated_multiplier(y, e, d);
            const Complex v = e * std::exp(-0.5 * (y1 * y1 + rho * rho));
            return std::norm(-mult + v); // g = (multiplier-residual + V) psi
        };
        out.g2 = std::sqrt(detail::qm_weighted_all(gdens, d, 9.0));
        out.Vq = std::pow(e, 1.0 - 0.5 * (d + 1) / q) * std::pow(2.0 * pi / q, 0.5 * d / q);
        auto vdens = [&](double y1, double rho) {
            return e * std::exp(-0.5 * (y1 * y1 + rho * rho));
        };
        out.Vpsi2 = std::sqrt(detail::qm_weighted_all(vdens, d, 9.0));
        return out;
    }
    // truncated variant: g is the multiplier restricted to |y| > M
    auto mdens = [&](double y1, double rho) {
        Point y{y1, rho, 0};
        return std::norm(detail::truncated_multiplier(y, e, d));
    };
    const double Y = std::max(9.0, qm.M + 6.0);
    const double all = detail::qm_weighted_all(mdens, d, Y);
    const double inside = std::isfinite(qm.M) ? detail::qm_weighted_disk(mdens, qm.M, d) : all;
    out.g2 = std::sqrt(std::max(0.0, all - inside));
    out.Vq = lq_norm(qm.V, q);
    auto vdens = [&](double y1, double rho) {
        if (std::isfinite(qm.M) && y1 * y1 + rho * rho > qm.M * qm.M) return 0.0;
        Point y{y1, rho, 0};
        return std::abs(detail::truncated_multiplier(y, e, d));
    };
    out.Vpsi2 = std::sqrt(detail::qm_weighted_all(vdens, d, Y));
    return out;
}

/// eps^{(d+1)/(4q) - 1} ||V||_q^{1/2} ||g||_2 / ||V^{1/2} psi||_2; zero when
/// g vanishes (the condition is void in that case).
inline double check_proposition_condition(const Quasimode& qm, double q) {
    const QuasimodeNorms n = quasimode_norms(qm, q);
    if (n.g2 == 0.0) return 0.0;
    return std::pow(qm.eps, 0.25 * (qm.d + 1) / q - 1.0) * std::sqrt(n.Vq) * n.g2 / n.Vpsi2;
}

/// M = eps^{-delta/(2 (2 + d/q))} with delta solving q = (d+1)/(2(1-delta)).
inline double truncation_M(double eps, double q, int d) {
    const double delta = 1.0 - 0.5 * (d + 1) / q;
    if (delta <= 0.0 || delta >= 1.0) throw std::domain_error("range: q must exceed (d+1)/2");
    return std::pow(eps, -delta / (2.0 * (2.0 + double(d) / q)));
}

/// Truncated variant V = eps V1 + eps^2 V2 on {|y| <= M}; the residual of the
/// full multiplier survives only outside the cutoff, so ||g||_2 is
/// exponentially small in M.
inline Quasimode truncated_quasimode(double eps, double q, int d) {
    Quasimode qm = gaussian_quasimode(eps, d);
    qm.truncated = true;
    qm.delta = 1.0 - 0.5 * (d + 1) / q;
    qm.M = truncation_M(eps, q, d);
    qm.V = TruncatedQuasimodePotential{eps, qm.M, d};
    return qm;
}

/// Exact-multiplier variant (M = infinity): V annihilates the residual, g = 0.
inline Quasimode exact_quasimode(double eps, int d) {
    Quasimode qm = gaussian_quasimode(eps, d);
    qm.truncated = true;
    qm.M = std::numeric_limits<double>::infinity();
    qm.V = TruncatedQuasimodePotential{eps, qm.M, d};
    return qm;
}

} // namespace eigenbound

#endif

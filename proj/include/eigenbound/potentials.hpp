// SPDX-License-Identifier: Apache-2.0

#ifndef EIGENBOUND_POTENTIALS_HPP
#define EIGENBOUND_POTENTIALS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "eigenbound/quadrature.hpp"
#include "eigenbound/types.hpp"

namespace eigenbound {

/// Axis-aligned bounding box in R^d.
struct Box {
    int d = 1;
    Point lo{0, 0, 0};
    Point hi{0, 0, 0};
    double volume() const {
        double v = 1.0;
        for (int i = 0; i < d; ++i) v *= hi[i] - lo[i];
        return v;
    }
};

/// Vertex-centered tensor grid: points_i samples per axis on [-half, half],
/// spacing 2*half/(points-1).
struct GridSpec {
    int d = 1;
    std::array<double, 3> half_extent{1, 1, 1};
    std::array<int, 3> points{2, 2, 2};

    double spacing(int axis) const {
        if (points[axis] < 2) throw std::domain_error("domain: grid needs >= 2 points per axis");
        return 2.0 * half_extent[axis] / (points[axis] - 1);
    }
    std::size_t total() const {
        std::size_t t = 1;
        for (int i = 0; i < d; ++i) t *= std::size_t(points[i]);
        return t;
    }
};

/// Complex samples on a GridSpec, row-major with the last axis fastest.
struct SampledGrid {
    GridSpec grid;
    std::vector<Complex> values;

    Complex interpolate(const Point& x) const {
        const int d = grid.d;
        std::array<double, 3> t{0, 0, 0};
        std::array<int, 3> i0{0, 0, 0};
        for (int a = 0; a < d; ++a) {
            const double h = grid.spacing(a);
            const double u = (x[a] + grid.half_extent[a]) / h;
            if (u < 0.0 || u > grid.points[a] - 1) return 0.0; // zero outside
            int i = std::min(int(u), grid.points[a] - 2);
            i0[a] = i;
            t[a] = u - i;
        }
        auto idx = [&](std::array<int, 3> iv) {
            std::size_t k = 0;
            for (int a = 0; a < d; ++a) k = k * grid.points[a] + iv[a];
            return k;
        };
        Complex acc = 0.0;
        const int corners = 1 << d;
        for (int c = 0; c < corners; ++c) {
            double wgt = 1.0;
            std::array<int, 3> iv = i0;
            for (int a = 0; a < d; ++a) {
                if (c & (1 << a)) {
                    iv[a] += 1;
                    wgt *= t[a];
                } else {
                    wgt *= 1.0 - t[a];
                }
            }
            acc += wgt * values[idx(iv)];
        }
        return acc;
    }
};

// --- potential variants ------------------------------------------------

struct ConstantBox {
    Complex alpha;
    Box box;
};

/// alpha on [-R,R] x [-sqrt(R), sqrt(R)]^{d-1}.
struct RectangularWell {
    Complex alpha;
    double R;
    int d;
};

struct SquareWell1D {
    Complex V0;
    double R;
};

struct RadialStep3D {
    Complex V0;
    double R;
};

/// V_n(x) = (n + |x_1| + |x'|^2)^{-1}; in L^q exactly for q > (d+1)/2.
struct IonescuJerison {
    double n;
    int d;
};

struct PerturbedIJ {
    IonescuJerison base;
    Complex kappa_c;
    SampledGrid W;
};

/// V(x) = eps * exp(-|y|^2/2) with y = (eps x_1, sqrt(eps) x').
struct GaussianQuasimodePotential {
    double eps;
    int d;
};

/// V = eps V1 + eps^2 V2 cut to {|y| <= M};
///   V1 = -(d-1 - |y'|^2 + 2i y_1 - i),  V2 = -(1 - y_1^2).
/// M = infinity gives the exact multiplier that annihilates the quasimode.
struct TruncatedQuasimodePotential {
    double eps;
    double M;
    int d;
};

struct SampledPotential {
    SampledGrid data;
};

using Potential = std::variant<ConstantBox, RectangularWell, SquareWell1D, RadialStep3D,
                               IonescuJerison, PerturbedIJ, GaussianQuasimodePotential,
                               TruncatedQuasimodePotential, SampledPotential>;

// --- basic queries ------------------------------------------------------

inline int dimension(const Potential& V) {
    return std::visit(
        [](const auto& p) -> int {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantBox>) return p.box.d;
            else if constexpr (std::is_same_v<T, RectangularWell>) return p.d;
            else if constexpr (std::is_same_v<T, SquareWell1D>) return 1;
            else if constexpr (std::is_same_v<T, RadialStep3D>) return 3;
            else if constexpr (std::is_same_v<T, IonescuJerison>) return p.d;
            else if constexpr (std::is_same_v<T, PerturbedIJ>) return p.base.d;
            else if constexpr (std::is_same_v<T, GaussianQuasimodePotential>) return p.d;
            else if constexpr (std::is_same_v<T, TruncatedQuasimodePotential>) return p.d;
            else return p.data.grid.d;
        },
        V);
}

namespace detail {

inline double norm_tail(const Point& x, int d, int from) {
    double s = 0.0;
    for (int a = from; a < d; ++a) s += x[a] * x[a];
    return s;
}

inline Point quasimode_y(const Point& x, double eps, int d) {
    Point y{0, 0, 0};
    y[0] = eps * x[0];
    const double r = std::sqrt(eps);
    for (int a = 1; a < d; ++a) y[a] = r * x[a];
    return y;
}

inline Complex truncated_multiplier(const Point& y, double eps, int d) {
    const Complex i(0.0, 1.0);
    const double yp2 = norm_tail(y, d, 1);
    const Complex V1 = -(double(d - 1) - yp2 + 2.0 * i * y[0] - i);
    const Complex V2 = -(1.0 - y[0] * y[0]);
    return eps * V1 + eps * eps * V2;
}

} // namespace detail

inline Complex eval(const Potential& V, const Point& x) {
    return std::visit(
        [&x](const auto& p) -> Complex {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantBox>) {
                for (int a = 0; a < p.box.d; ++a)
                    if (x[a] < p.box.lo[a] || x[a] > p.box.hi[a]) return 0.0;
                return p.alpha;
            } else if constexpr (std::is_same_v<T, RectangularWell>) {
                if (std::abs(x[0]) > p.R) return 0.0;
                const double s = std::sqrt(p.R);
                for (int a = 1; a < p.d; ++a)
                    if (std::abs(x[a]) > s) return 0.0;
                return p.alpha;
            } else if constexpr (std::is_same_v<T, SquareWell1D>) {
                return std::abs(x[0]) <= p.R ? p.V0 : Complex(0.0);
            } else if constexpr (std::is_same_v<T, RadialStep3D>) {
                const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
                return r2 <= p.R * p.R ? p.V0 : Complex(0.0);
            } else if constexpr (std::is_same_v<T, IonescuJerison>) {
                return 1.0 / (p.n + std::abs(x[0]) + detail::norm_tail(x, p.d, 1));
            } else if constexpr (std::is_same_v<T, PerturbedIJ>) {
                const Complex vn = 1.0 / (p.base.n + std::abs(x[0]) + detail::norm_tail(x, p.base.d, 1));
                return vn + p.kappa_c * p.W.interpolate(x);
            } else if constexpr (std::is_same_v<T, GaussianQuasimodePotential>) {
                const Point y = detail::quasimode_y(x, p.eps, p.d);
                const double y2 = y[0] * y[0] + detail::norm_tail(y, p.d, 1);
                return p.eps * std::exp(-0.5 * y2);
            } else if constexpr (std::is_same_v<T, TruncatedQuasimodePotential>) {
                const Point y = detail::quasimode_y(x, p.eps, p.d);
                const double y2 = y[0] * y[0] + detail::norm_tail(y, p.d, 1);
                if (y2 > p.M * p.M) return 0.0;
                return detail::truncated_multiplier(y, p.eps, p.d);
            } else {
                return p.data.interpolate(x);
            }
        },
        V);
}

inline Complex eval(const Potential& V, double x0, double x1 = 0.0, double x2 = 0.0) {
    return eval(V, Point{x0, x1, x2});
}

// --- support and symmetry ----------------------------------------------

inline Box support_box(const Potential& V) {
    return std::visit(
        [](const auto& p) -> Box {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantBox>) {
                return p.box;
            } else if constexpr (std::is_same_v<T, RectangularWell>) {
                Box b;
                b.d = p.d;
                const double s = std::sqrt(p.R);
                b.lo = {-p.R, -s, -s};
                b.hi = {p.R, s, s};
                return b;
            } else if constexpr (std::is_same_v<T, SquareWell1D>) {
                return Box{1, {-p.R, 0, 0}, {p.R, 0, 0}};
            } else if constexpr (std::is_same_v<T, RadialStep3D>) {
                return Box{3, {-p.R, -p.R, -p.R}, {p.R, p.R, p.R}};
            } else if constexpr (std::is_same_v<T, IonescuJerison>) {
                // effective: |V| falls below 1e-9/n outside
                Box b;
                b.d = p.d;
                const double X = 1e9 * p.n, S = std::sqrt(X);
                b.lo = {-X, -S, -S};
                b.hi = {X, S, S};
                return b;
            } else if constexpr (std::is_same_v<T, PerturbedIJ>) {
                Box b;
                b.d = p.base.d;
                for (int a = 0; a < b.d; ++a) {
                    b.lo[a] = -p.W.grid.half_extent[a];
                    b.hi[a] = p.W.grid.half_extent[a];
                }
                return b;
            } else if constexpr (std::is_same_v<T, GaussianQuasimodePotential>) {
                // |y| <= 9 carries all but e^{-40} of every norm here
                Box b;
                b.d = p.d;
                const double X = 9.0 / p.eps, S = 9.0 / std::sqrt(p.eps);
                b.lo = {-X, -S, -S};
                b.hi = {X, S, S};
                return b;
            } else if constexpr (std::is_same_v<T, TruncatedQuasimodePotential>) {
                Box b;
                b.d = p.d;
                const double M = std::isfinite(p.M) ? p.M : 9.0;
                const double X = M / p.eps, S = M / std::sqrt(p.eps);
                b.lo = {-X, -S, -S};
                b.hi = {X, S, S};
                return b;
            } else {
                Box b;
                b.d = p.data.grid.d;
                for (int a = 0; a < b.d; ++a) {
                    b.lo[a] = -p.data.grid.half_extent[a];
                    b.hi[a] = p.data.grid.half_extent[a];
                }
                return b;
            }
        },
        V);
}

/// True when |V| is centrally symmetric and nonincreasing from the origin, so
/// translation suprema are attained at y = 0.
inline bool symmetric_nonincreasing(const Potential& V) {
    return std::visit(
        [](const auto& p) -> bool {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantBox>) {
                for (int a = 0; a < p.box.d; ++a)
                    if (std::abs(p.box.lo[a] + p.box.hi[a]) > 1e-14 * (std::abs(p.box.hi[a]) + 1.0))
                        return false;
                return true;
            } else if constexpr (std::is_same_v<T, PerturbedIJ> || std::is_same_v<T, SampledPotential>) {
                return false;
            } else {
                return true;
            }
        },
        V);
}

inline double sup_abs(const Potential& V) {
    return std::visit(
        [&V](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantBox>) return std::abs(p.alpha);
            else if constexpr (std::is_same_v<T, RectangularWell>) return std::abs(p.alpha);
            else if constexpr (std::is_same_v<T, SquareWell1D>) return std::abs(p.V0);
            else if constexpr (std::is_same_v<T, RadialStep3D>) return std::abs(p.V0);
            else if constexpr (std::is_same_v<T, IonescuJerison>) return 1.0 / p.n;
            else if constexpr (std::is_same_v<T, GaussianQuasimodePotential>) return p.eps;
            else {
                // sample on the support box; adequate for the remaining variants
                const Box b = support_box(V);
                double s = 0.0;
                const int n = 33;
                Point x{0, 0, 0};
                const int n1 = b.d > 1 ? n : 1, n2 = b.d > 2 ? n : 1;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n1; ++j)
                        for (int k = 0; k < n2; ++k) {
                            x[0] = b.lo[0] + (b.hi[0] - b.lo[0]) * i / (n - 1.0);
                            if (b.d > 1) x[1] = b.lo[1] + (b.hi[1] - b.lo[1]) * j / (n - 1.0);
                            if (b.d > 2) x[2] = b.lo[2] + (b.hi[2] - b.lo[2]) * k / (n - 1.0);
                            s = std::max(s, std::abs(eval(V, x)));
                        }
                return s;
            }
        },
        V);
}

// --- L^q norms -----------------------------------------------------------

namespace detail {

/// \int_{R^{d-1}} (A + |x'|^2)^{-q} dx' = c(d,q) A^{(d-1)/2 - q}.
inline double ij_marginal_constant(int d, double q) {
    if (d == 1) return 1.0; // no transverse directions
    const double m = 0.5 * (d - 1);
    return std::pow(pi, m) * std::tgamma(q - m) / std::tgamma(q);
}

/// Tensor Gauss-Legendre integral of f(|V|) over a box (n nodes per axis).
template <class G>
double box_integral(const G& g, const Box& b, int n) {
    const Rule1D r0 = gauss_legendre_on(b.lo[0], b.hi[0], n);
    if (b.d == 1) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += r0.w[i] * g(Point{r0.x[i], 0, 0});
        return s;
    }
    const Rule1D r1 = gauss_legendre_on(b.lo[1], b.hi[1], n);
    if (b.d == 2) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += r0.w[i] * r1.w[j] * g(Point{r0.x[i], r1.x[j], 0});
        return s;
    }
    const Rule1D r2 = gauss_legendre_on(b.lo[2], b.hi[2], n);
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double sj = 0.0;
            for (int k = 0; k < n; ++k) sj += r2.w[k] * g(Point{r0.x[i], r1.x[j], r2.x[k]});
            s += r0.w[i] * r1.w[j] * sj;
        }
    return s;
}

/// 2D reduced integral for functions of (y_1, |y'|):
///   \int f(y_1, rho) S_{d-2} rho^{d-2} drho dy_1  over the disk |y| <= M.
/// Substituting y_1 = M sin(theta) keeps the integrand smooth at the rim.
template <class F>
double disk_integral_reduced(const F& f, double M, int d, int n = 96) {
    const double sphere = (d == 2) ? 2.0 : 2.0 * pi; // S_{d-2} measure, d in {2,3}
    const Rule1D th = gauss_legendre_on(-0.5 * pi, 0.5 * pi, n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double y1 = M * std::sin(th.x[i]);
        const double pmax = M * std::cos(th.x[i]);
        const Rule1D rr = gauss_legendre_on(0.0, pmax, n);
        double inner = 0.0;
        for (int j = 0; j < n; ++j) {
            const double rho = rr.x[j];
            const double wgt = (d == 3) ? rho : 1.0;
            inner += rr.w[j] * wgt * f(y1, rho);
        }
        s += th.w[i] * M * std::cos(th.x[i]) * inner;
    }
    return sphere * s;
}

/// Same reduction over the strip y_1 in [-Y,Y], rho in [0,P].
template <class F>
double strip_integral_reduced(const F& f, double Y, double P, int d, int n = 96) {
    const double sphere = (d == 2) ? 2.0 : 2.0 * pi;
    const Rule1D ry = gauss_legendre_on(-Y, Y, n);
    const Rule1D rr = gauss_legendre_on(0.0, P, n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double inner = 0.0;
        for (int j = 0; j < n; ++j) {
            const double rho = rr.x[j];
            const double wgt = (d == 3) ? rho : 1.0;
            inner += rr.w[j] * wgt * f(ry.x[i], rho);
        }
        s += ry.w[i] * inner;
    }
    return sphere * s;
}

inline double ij_norm_pow(double n, int d, double q) {
    // adaptive x_1 quadrature of the analytic transverse marginal, plus the
    // exact power-law tail beyond T
    const double c = ij_marginal_constant(d, q);
    const double expo = 0.5 * (d - 1) - q; // < -1 since q > (d+1)/2
    const double T = n * 1e6;
    auto f = [&](double t) { return c * std::pow(n + t, expo); };
    const double head = adapt_integrate_rel(f, 0.0, T, 1e-9);
    const double tail = c * std::pow(n + T, expo + 1.0) / (-expo - 1.0);
    return 2.0 * (head + tail);
}

} // namespace detail

/// L^q norm. Step potentials use their closed forms; the rest go through
/// quadrature with tails controlled by the known decay rates.
inline double lq_norm(const Potential& V, double q) {
    if (q < 1.0) throw std::domain_error("domain: q must be >= 1");
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantBox>) {
                return std::abs(p.alpha) * std::pow(p.box.volume(), 1.0 / q);
            } else if constexpr (std::is_same_v<T, RectangularWell>) {
                return std::abs(p.alpha) * std::pow(2.0, p.d / q) *
                       std::pow(p.R, 0.5 * (p.d + 1) / q);
            } else if constexpr (std::is_same_v<T, SquareWell1D>) {
                return std::abs(p.V0) * std::pow(2.0 * p.R, 1.0 / q);
            } else if constexpr (std::is_same_v<T, RadialStep3D>) {
                return std::abs(p.V0) * std::pow(4.0 * pi * p.R * p.R * p.R / 3.0, 1.0 / q);
            } else if constexpr (std::is_same_v<T, IonescuJerison>) {
                if (q <= 0.5 * (p.d + 1) + 1e-12)
                    throw std::domain_error("divergent: Ionescu-Jerison needs q > (d+1)/2");
                return std::pow(detail::ij_norm_pow(p.n, p.d, q), 1.0 / q);
            } else if constexpr (std::is_same_v<T, PerturbedIJ>) {
                if (q <= 0.5 * (p.base.d + 1) + 1e-12)
                    throw std::domain_error("divergent: Ionescu-Jerison needs q > (d+1)/2");
                const Box wb = support_box(V);
                const Potential vn = p.base;
                auto inside = detail::box_integral(
                    [&](const Point& x) { return std::pow(std::abs(eval(V, x)), q); }, wb, 48);
                auto vn_inside = detail::box_integral(
                    [&](const Point& x) { return std::pow(std::abs(eval(vn, x)), q); }, wb, 48);
                const double vn_all = detail::ij_norm_pow(p.base.n, p.base.d, q);
                return std::pow(inside + std::max(0.0, vn_all - vn_inside), 1.0 / q);
            } else if constexpr (std::is_same_v<T, GaussianQuasimodePotential>) {
                // separable Gaussian in y; Jacobian eps^{-(d+1)/2}
                auto f1 = [&](double t) { return std::exp(-0.5 * q * t * t); };
                const double one = adapt_integrate_rel(f1, -12.0, 12.0, 1e-10);
                const double jac = std::pow(p.eps, -0.5 * (p.d + 1));
                return std::pow(std::pow(p.eps, q) * jac * std::pow(one, p.d), 1.0 / q);
            } else if constexpr (std::is_same_v<T, TruncatedQuasimodePotential>) {
                const double jac = std::pow(p.eps, -0.5 * (p.d + 1));
                auto f = [&](double y1, double rho) {
                    Point y{y1, rho, 0};
                    return std::pow(std::abs(detail::truncated_multiplier(y, p.eps, p.d)), q);
                };
                double val;
                if (std::isfinite(p.M))
                    val = detail::disk_integral_reduced(f, p.M, p.d);
                else
                    val = detail::strip_integral_reduced(f, 10.0, 10.0, p.d);
                return std::pow(jac * val, 1.0 / q);
            } else {
                const Box b = support_box(V);
                int n = 2 * *std::max_element(p.data.grid.points.begin(),
                                              p.data.grid.points.begin() + b.d);
                n = std::clamp(n, 32, 96);
                const double val = detail::box_integral(
                    [&](const Point& x) { return std::pow(std::abs(eval(V, x)), q); }, b, n);
                return std::pow(val, 1.0 / q);
            }
        },
        V);
}

// --- local (ball) norms ---------------------------------------------------

namespace detail {

/// Volume of the intersection of two balls at centre distance a (radii R, r).
inline double lens_volume(double R, double r, double a) {
    if (a >= R + r) return 0.0;
    if (a <= std::abs(R - r)) {
        const double m = std::min(R, r);
        return 4.0 * pi * m * m * m / 3.0;
    }
    const double t1 = (R + r - a) * (R + r - a);
    const double t2 = a * a + 2.0 * a * (R + r) - 3.0 * (R - r) * (R - r);
    return pi * t1 * t2 / (12.0 * a);
}

/// Generic spherical-shell quadrature of |V|^q over B(center, radius).
inline double ball_integral_generic(const Potential& V, double q, const Point& c, double radius) {
    const int d = dimension(V);
    if (d == 1) {
        auto f = [&](double x) { return std::pow(std::abs(eval(V, Point{x, 0, 0})), q); };
        return adapt_integrate_rel(f, c[0] - radius, c[0] + radius, 1e-8);
    }
    const int nr = 96;
    const Rule1D rr = gauss_legendre_on(0.0, radius, nr);
    if (d == 2) {
        const int nt = 128;
        double s = 0.0;
        for (int i = 0; i < nr; ++i) {
            double ang = 0.0;
            for (int j = 0; j < nt; ++j) {
                const double th = 2.0 * pi * j / nt;
                Point x{c[0] + rr.x[i] * std::cos(th), c[1] + rr.x[i] * std::sin(th), 0};
                ang += std::pow(std::abs(eval(V, x)), q);
            }
            s += rr.w[i] * rr.x[i] * ang * (2.0 * pi / nt);
        }
        return s;
    }
    const int nct = 48, nph = 96;
    const Rule1D ct = gauss_legendre_on(-1.0, 1.0, nct);
    double s = 0.0;
    for (int i = 0; i < nr; ++i) {
        double shell = 0.0;
        for (int j = 0; j < nct; ++j) {
            const double sth = std::sqrt(std::max(0.0, 1.0 - ct.x[j] * ct.x[j]));
            double ring = 0.0;
            for (int k = 0; k < nph; ++k) {
                const double ph = 2.0 * pi * k / nph;
                Point x{c[0] + rr.x[i] * sth * std::cos(ph), c[1] + rr.x[i] * sth * std::sin(ph),
                        c[2] + rr.x[i] * ct.x[j]};
                ring += std::pow(std::abs(eval(V, x)), q);
            }
            shell += ct.w[j] * ring * (2.0 * pi / nph);
        }
        s += rr.w[i] * rr.x[i] * rr.x[i] * shell;
    }
    return s;
}

/// Centered ball integral of |V_n|^q via the exact transverse marginal; valid
/// for any radius/n ratio (the mass concentrates near the x_1 axis).
inline double ij_ball_integral_centered(double n, int d, double q, double radius) {
    if (d == 3) {
        auto f = [&](double t) {
            const double A = n + std::abs(t);
            const double P2 = radius * radius - t * t;
            return pi / (q - 1.0) *
                   (std::pow(A, 1.0 - q) - std::pow(A + P2, 1.0 - q));
        };
        return adapt_integrate_rel(f, -radius, radius, 1e-8);
    }
    if (d == 2) {
        auto f = [&](double t) {
            const double A = n + std::abs(t);
            const double P = std::sqrt(std::max(0.0, radius * radius - t * t));
            auto g = [&](double rho) { return std::pow(A + rho * rho, -q); };
            return 2.0 * adapt_integrate_rel(g, 0.0, P, 1e-8);
        };
        return adapt_integrate_rel(f, -radius, radius, 1e-7);
    }
    auto f = [&](double t) { return std::pow(n + std::abs(t), -q); };
    return adapt_integrate_rel(f, -radius, radius, 1e-9);
}

inline bool ball_contains_box(const Point& c, double radius, const Box& b) {
    double far2 = 0.0;
    for (int a = 0; a < b.d; ++a) {
        const double m = std::max(std::abs(b.lo[a] - c[a]), std::abs(b.hi[a] - c[a]));
        far2 += m * m;
    }
    return far2 <= radius * radius;
}

} // namespace detail

/// (\int_{B(center,radius)} |V|^q)^{1/q}. Exact for 1D step potentials and for
/// the centered radial step; quadrature elsewhere.
inline double local_ball_norm(const Potential& V, double q, const Point& center, double radius) {
    if (radius <= 0.0) throw std::domain_error("domain: radius must be positive");
    const int d = dimension(V);
    // a ball that swallows the support reduces to the global norm
    if (!std::holds_alternative<IonescuJerison>(V) && !std::holds_alternative<PerturbedIJ>(V) &&
        detail::ball_contains_box(center, radius, support_box(V)))
        return lq_norm(V, q);

    if (const auto* w = std::get_if<SquareWell1D>(&V)) {
        const double a = std::max(-w->R, center[0] - radius);
        const double b = std::min(w->R, center[0] + radius);
        const double len = std::max(0.0, b - a);
        return std::abs(w->V0) * std::pow(len, 1.0 / q);
    }
    if (const auto* s = std::get_if<RadialStep3D>(&V)) {
        const double a = std::sqrt(center[0] * center[0] + center[1] * center[1] +
                                   center[2] * center[2]);
        const double vol = detail::lens_volume(s->R, radius, a);
        return std::abs(s->V0) * std::pow(vol, 1.0 / q);
    }
    if (const auto* ij = std::get_if<IonescuJerison>(&V)) {
        const double c2 = center[0] * center[0] + detail::norm_tail(center, d, 1);
        if (c2 == 0.0)
            return std::pow(detail::ij_ball_integral_centered(ij->n, ij->d, q, radius), 1.0 / q);
    }
    return std::pow(detail::ball_integral_generic(V, q, center, radius), 1.0 / q);
}

/// Model curve for the centered local norm of the Ionescu-Jerison family:
/// (1/n) max(1, ln(R/n)).
inline double ij_local_norm_model(double n, double R, int d) {
    (void)d;
    if (n <= 0.0 || R <= 0.0) throw std::domain_error("domain: n and R must be positive");
    return (1.0 / n) * std::max(1.0, std::log(R / n));
}

inline Potential perturbed_ij(double n, Complex kappa_c, SampledGrid W) {
    if (std::abs(kappa_c) >= 1.0) throw std::domain_error("domain: |kappa_c| must be < 1");
    return PerturbedIJ{IonescuJerison{n, W.grid.d}, kappa_c, std::move(W)};
}

// --- sampled-potential text format ---------------------------------------
//
// header "d n_1 ... n_d L_1 ... L_d", then one "re im" pair per grid point in
// row-major order.

inline void write_sampled(std::ostream& os, const SampledPotential& p) {
    const GridSpec& g = p.data.grid;
    os << g.d;
    for (int a = 0; a < g.d; ++a) os << ' ' << g.points[a];
    for (int a = 0; a < g.d; ++a) os << ' ' << g.half_extent[a];
    os << '\n';
    os.precision(17);
    for (const Complex& v : p.data.values) os << v.real() << ' ' << v.imag() << '\n';
}

inline SampledPotential read_sampled(std::istream& is) {
    GridSpec g;
    if (!(is >> g.d) || g.d < 1 || g.d > 3)
        throw std::runtime_error("parse: bad dimension in sampled-potential header");
    for (int a = 0; a < g.d; ++a)
        if (!(is >> g.points[a]) || g.points[a] < 2)
            throw std::runtime_error("parse: bad point count in sampled-potential header");
    for (int a = 0; a < g.d; ++a)
        if (!(is >> g.half_extent[a]) || g.half_extent[a] <= 0.0)
            throw std::runtime_error("parse: bad extent in sampled-potential header");
    SampledGrid data;
    data.grid = g;
    data.values.resize(g.total());
    for (std::size_t i = 0; i < data.values.size(); ++i) {
        double re, im;
        if (!(is >> re >> im)) throw std::runtime_error("parse: truncated sampled-potential data");
        data.values[i] = Complex(re, im);
    }
    return SampledPotential{std::move(data)};
}

} // namespace eigenbound

#endif

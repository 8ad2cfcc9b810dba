// SPDX-License-Identifier: Apache-2.0

#ifndef EIGENBOUND_QUADRATURE_HPP
#define EIGENBOUND_QUADRATURE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "eigenbound/types.hpp"

namespace eigenbound {

struct Rule1D {
    std::vector<double> x;
    std::vector<double> w;
};

/// Gauss-Legendre rule on [-1,1], computed by Newton iteration on P_n and
/// cached per order.
inline const Rule1D& gauss_legendre(int n) {
    static std::map<int, Rule1D> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[n - 1 - i] = r.w[i];
    }
    return cache.emplace(n, std::move(r)).first->second;
}

inline Rule1D gauss_legendre_on(double a, double b, int n) {
    const Rule1D& base = gauss_legendre(n);
    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        r.x[i] = mid + half * base.x[i];
        r.w[i] = half * base.w[i];
    }
    return r;
}

/// Generalized Gauss-Laguerre rule for the weight t^alpha e^{-t} on [0,inf),
/// via the Golub-Welsch eigenvalue method. Cached per (n, alpha).
inline const Rule1D& gauss_laguerre(int n, double alpha) {
    static std::map<std::pair<int, long long>, Rule1D> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    const auto key = std::make_pair(n, (long long)std::llround(alpha * 1e9));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        J(k, k) = 2.0 * k + alpha + 1.0;
        if (k + 1 < n) {
            double b = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
            J(k, k + 1) = b;
            J(k + 1, k) = b;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double mu0 = std::tgamma(alpha + 1.0);
    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    for (int k = 0; k < n; ++k) {
        r.x[k] = es.eigenvalues()(k);
        const double v0 = es.eigenvectors()(0, k);
        r.w[k] = mu0 * v0 * v0;
    }
    return cache.emplace(key, std::move(r)).first->second;
}

namespace detail {

template <class F, class V>
void adapt_rec(F&& f, double a, double b, double tol, int depth, V& acc) {
    const Rule1D r15 = gauss_legendre_on(a, b, 15);
    const Rule1D r7 = gauss_legendre_on(a, b, 7);
    V s15{}, s7{};
    for (int i = 0; i < 15; ++i) s15 += V(f(r15.x[i])) * r15.w[i];
    for (int i = 0; i < 7; ++i) s7 += V(f(r7.x[i])) * r7.w[i];
    if (std::abs(s15 - s7) <= tol || depth >= 28) {
        acc += s15;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt_rec(f, a, m, 0.5 * tol, depth + 1, acc);
    adapt_rec(f, m, b, 0.5 * tol, depth + 1, acc);
}

} // namespace detail

/// Adaptive Gauss quadrature on [a,b]; abs_tol is an absolute target, refined
/// by bisection of the 7/15-point difference estimate.
template <class F>
double adapt_integrate(F&& f, double a, double b, double abs_tol) {
    double acc = 0.0;
    detail::adapt_rec(f, a, b, abs_tol, 0, acc);
    return acc;
}

template <class F>
Complex adapt_integrate_c(F&& f, double a, double b, double abs_tol) {
    Complex acc = 0.0;
    detail::adapt_rec(f, a, b, abs_tol, 0, acc);
    return acc;
}

/// Integrates f over [a,b] by first evaluating at a coarse scale to fix the
/// magnitude, then refining to rel_tol relative accuracy.
template <class F>
double adapt_integrate_rel(F&& f, double a, double b, double rel_tol) {
    double coarse = 0.0;
    const Rule1D r = gauss_legendre_on(a, b, 31);
    for (int i = 0; i < 31; ++i) coarse += f(r.x[i]) * r.w[i];
    const double scale = std::max(std::abs(coarse), 1e-300);
    return adapt_integrate(f, a, b, rel_tol * scale);
}

} // namespace eigenbound

#endif

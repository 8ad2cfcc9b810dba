// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "eigenbound/quasimode.hpp"
#include "eigenbound/sweep.hpp"

using namespace eigenbound;

TEST_CASE("quasimode normalization") {
    for (int d : {2, 3}) {
        for (double eps : {0.4, 0.1}) {
            const Quasimode qm = gaussian_quasimode(eps, d);
            CHECK(qm.N == Catch::Approx(std::pow(eps, -0.5 * (d + 1))).epsilon(1e-15));
            CHECK(psi_l2_squared(qm) == Catch::Approx(std::pow(pi, 0.5 * d)).epsilon(1e-8));
            CHECK(std::abs(quasimode_psi(qm, Point{0, 0, 0}) - 1.0 / std::sqrt(qm.N)) < 1e-15);
        }
    }
}

TEST_CASE("residual identity") {
    const double eps = 0.1;
    const Quasimode qm = gaussian_quasimode(eps, 3);

    SECTION("value at the origin") {
        const Complex want = (eps * Complex(2.0, -1.0) + eps * eps) * quasimode_psi(qm, Point{0, 0, 0});
        CHECK(std::abs(residual_analytic(qm, Point{0, 0, 0}) - want) < 1e-15);
    }
    SECTION("leading order is linear in eps at fixed x") {
        const Point x{0.7, -0.4, 0.2};
        double prev = 0.0;
        for (double e : {0.2, 0.1, 0.05}) {
            const Quasimode q2 = gaussian_quasimode(e, 3);
            const double v = std::abs(residual_analytic(q2, x) / quasimode_psi(q2, x));
            if (prev > 0.0) CHECK(prev / v == Catch::Approx(2.0).epsilon(0.25));
            prev = v;
        }
    }
    SECTION("discrete Laplacian agrees at second order") {
        auto stencil_residual = [&](double h) {
            double worst = 0.0;
            for (const Point& x : {Point{0, 0, 0}, Point{1.3, 0.4, -0.6}, Point{-2.0, 1.0, 0.5}}) {
                Complex lap = -2.0 * 3.0 * quasimode_psi(qm, x);
                for (int a = 0; a < 3; ++a) {
                    Point xp = x, xm = x;
                    xp[a] += h;
                    xm[a] -= h;
                    lap += quasimode_psi(qm, xp) + quasimode_psi(qm, xm);
                }
                const Complex disc =
                    -lap / (h * h) - (1.0 + Complex(0, 1) * eps) * quasimode_psi(qm, x);
                worst = std::max(worst, std::abs(disc - residual_analytic(qm, x)));
            }
            return worst;
        };
        const double r1 = stencil_residual(0.02), r2 = stencil_residual(0.01);
        const double order = std::log2(r1 / r2);
        CHECK(order > 1.8);
        CHECK(order < 2.2);
    }
}

TEST_CASE("quasimode norm scalings") {
    const int d = 3;
    const double q = 4.0;
    std::vector<std::pair<double, double>> g2p, vqp, vpsi, cqp;
    for (double eps : {0.4, 0.2, 0.1, 0.05}) {
        const Quasimode qm = gaussian_quasimode(eps, d);
        const QuasimodeNorms n = quasimode_norms(qm, q);
        g2p.emplace_back(eps, n.g2);
        vqp.emplace_back(eps, n.Vq);
        vpsi.emplace_back(eps, n.Vpsi2);
        cqp.emplace_back(eps, check_proposition_condition(qm, q));
        // closed forms
        CHECK(n.Vq == Catch::Approx(std::pow(eps, 1.0 - 0.5 * (d + 1) / q) *
                                    std::pow(2.0 * pi / q, 0.5 * d / q)).epsilon(1e-12));
        CHECK(n.Vpsi2 == Catch::Approx(std::sqrt(eps) * std::pow(2.0 * pi / 3.0, 0.25 * d))
                             .epsilon(1e-8));
    }
    const double sg = fit_slope(g2p).slope;
    const double sv = fit_slope(vqp).slope;
    const double sp = fit_slope(vpsi).slope;
    const double sc = fit_slope(cqp).slope;
    CHECK(sg == Catch::Approx(1.0).margin(0.1));
    CHECK(sv == Catch::Approx(1.0 - 0.5 * (d + 1) / q).margin(1e-6)); // exact closed form
    CHECK(sp == Catch::Approx(0.5).margin(1e-6));
    // slope bookkeeping: condition = (d+1)/(4q) - 1 + Vq/2 + g2 - Vpsi2
    const double stack = (0.25 * (d + 1) / q - 1.0) + 0.5 * sv + sg - sp;
    CHECK(sc == Catch::Approx(stack).margin(0.05));
}

TEST_CASE("sharpness ratio of the quasimode bound is constant") {
    const int d = 3;
    const double q = 4.0;
    double lo = 1e300, hi = 0.0;
    for (double eps : {0.4, 0.2, 0.1, 0.05}) {
        const QuasimodeNorms n = quasimode_norms(gaussian_quasimode(eps, d), q);
        const double ratio = std::pow(eps, 1.0 - 0.5 * (d + 1) / q) / n.Vq;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(hi / lo == Catch::Approx(1.0).epsilon(1e-9));
    CHECK(lo == Catch::Approx(std::pow(2.0 * pi / q, -0.5 * 3 / q)).epsilon(1e-9));
}

TEST_CASE("exact multiplier potential voids the condition") {
    const Quasimode qm = exact_quasimode(0.1, 3);
    const QuasimodeNorms n = quasimode_norms(qm, 4.0);
    CHECK(n.g2 == Catch::Approx(0.0).margin(1e-12));
    CHECK(check_proposition_condition(qm, 4.0) == 0.0);
}

TEST_CASE("truncated quasimode") {
    SECTION("delta and M formulas") {
        CHECK(truncated_quasimode(0.1, 4.0, 3).delta == Catch::Approx(0.5));
        CHECK(truncation_M(0.1, 4.0, 3) == Catch::Approx(std::pow(0.1, -1.0 / 11.0)).epsilon(1e-12));
        CHECK(truncation_M(0.1, 4.0, 3) == Catch::Approx(1.2328).epsilon(1e-3));
    }
    SECTION("defect is exponentially small and brackets stay tight") {
        double lo = 1e300, hi = 0.0;
        for (double eps : {0.3, 0.2, 0.1}) {
            const Quasimode qm = truncated_quasimode(eps, 4.0, 3);
            const QuasimodeNorms n = quasimode_norms(qm, 4.0);
            const double scaled = n.g2 / (eps * std::exp(-0.25 * qm.M * qm.M));
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        CHECK(hi / lo < 4.0);
    }
    SECTION("truncation error against the quasimode decays monotonically in M") {
        // the multiplier grows polynomially in y, so the plain L^q distance
        // between the cutoff and uncut potentials diverges; the meaningful
        // truncation error is the one felt by the mode, ||(V_M - V_inf) psi||_2
        const double eps = 0.1;
        const int d = 3;
        double prev = 1e300;
        for (double M : {1.0, 2.0, 3.0}) {
            auto f = [&](double y1, double rho) {
                if (y1 * y1 + rho * rho <= M * M) return 0.0;
                Point y{y1, rho, 0};
                return std::norm(detail::truncated_multiplier(y, eps, d));
            };
            const double diff = std::sqrt(detail::qm_weighted_all(f, d, M + 8.0));
            CHECK(diff < prev);
            CHECK(diff > 0.0);
            prev = diff;
        }
    }
    SECTION("preconditions") {
        CHECK_THROWS_WITH(truncated_quasimode(0.1, 1.5, 3), Catch::Matchers::StartsWith("range"));
        CHECK_THROWS_WITH(quasimode_norms(gaussian_quasimode(0.1, 3), 2.0),
                          Catch::Matchers::StartsWith("range"));
    }
}

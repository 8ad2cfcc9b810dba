// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <sstream>

#include "eigenbound/potentials.hpp"
#include "oracles.hpp"

using namespace eigenbound;

namespace {

/// Closed form of ||V_n||_q^q for the Ionescu-Jerison family, d >= 2:
///   2 c(d,q) n^{(d+1)/2 - q} / (q - (d+1)/2), c(d,q) the transverse marginal.
double ij_norm_pow_closed(double n, int d, double q) {
    const double m = 0.5 * (d - 1);
    const double c = std::pow(pi, m) * std::tgamma(q - m) / std::tgamma(q);
    return 2.0 * c * std::pow(n, 0.5 * (d + 1) - q) / (q - 0.5 * (d + 1));
}

} // namespace

TEST_CASE("pointwise evaluation of the gallery") {
    const Potential rw = RectangularWell{Complex(1, 0), 4.0, 3};
    CHECK(eval(rw, 0.0, 0.0, 0.0) == Complex(1, 0));
    CHECK(eval(rw, 5.0, 0.0, 0.0) == Complex(0, 0));
    CHECK(eval(rw, 3.9, 1.9, -1.9) == Complex(1, 0));
    CHECK(eval(rw, 3.9, 2.1, 0.0) == Complex(0, 0));

    const Potential ij = IonescuJerison{10.0, 3};
    CHECK(std::abs(eval(ij, 2.0, 1.0, 1.0) - Complex(1.0 / 14.0, 0)) < 1e-15);
    CHECK(std::abs(eval(ij, -2.0, -1.0, 1.0) - Complex(1.0 / 14.0, 0)) < 1e-15);
    // magnitude bounded by 1/n everywhere, positive
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double m = std::abs(eval(ij, u(rng), u(rng), u(rng)));
        CHECK(m > 0.0);
        CHECK(m <= 0.1 + 1e-15);
    }
}

TEST_CASE("L^q norms: closed forms and quadrature cross-checks") {
    CHECK(lq_norm(Potential{RectangularWell{Complex(1, 0), 1.0, 3}}, 2.0) ==
          Catch::Approx(std::sqrt(8.0)).epsilon(1e-14));
    CHECK(lq_norm(Potential{SquareWell1D{Complex(0, 2), 3.0}}, 1.0) ==
          Catch::Approx(12.0).epsilon(1e-14));

    SECTION("rectangular well: quadrature equals the closed form") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> ua(0.2, 3.0), uR(0.5, 6.0), uq(1.0, 5.0);
        std::uniform_int_distribution<int> ud(1, 3);
        for (int i = 0; i < 20; ++i) {
            const double a = ua(rng), R = uR(rng), q = uq(rng);
            const int d = ud(rng);
            const Potential V = RectangularWell{Complex(a * 0.6, -a * 0.8), R, d};
            const double closed = lq_norm(V, q);
            const double quad = std::pow(
                detail::box_integral(
                    [&](const Point& x) { return std::pow(std::abs(eval(V, x)), q); },
                    support_box(V), 48),
                1.0 / q);
            CHECK(quad == Catch::Approx(closed).epsilon(1e-6));
        }
    }
    SECTION("scaling: x -> V(x/lam) multiplies the norm by lam^{d/q}") {
        for (double lam : {0.5, 2.0, 3.7}) {
            const Potential V = RectangularWell{Complex(0.3, 1.1), 2.0, 3};
            // V(x/lam) for the rectangular well is the well with R -> lam R
            // only when the transverse width scales the same way; use the box
            const Box b{3, {-2.0, -1.0, -0.5}, {2.0, 1.0, 0.5}};
            const Potential cb = ConstantBox{Complex(0.3, 1.1), b};
            Box bs = b;
            for (int a = 0; a < 3; ++a) {
                bs.lo[a] *= lam;
                bs.hi[a] *= lam;
            }
            const Potential cbs = ConstantBox{Complex(0.3, 1.1), bs};
            for (double q : {1.0, 2.5}) {
                CHECK(lq_norm(cbs, q) ==
                      Catch::Approx(std::pow(lam, 3.0 / q) * lq_norm(cb, q)).epsilon(1e-14));
            }
        }
    }
    SECTION("Ionescu-Jerison: quadrature path vs closed form, divergence guard") {
        for (double n : {10.0, 100.0, 1000.0}) {
            const Potential V = IonescuJerison{n, 3};
            const double closed = std::pow(ij_norm_pow_closed(n, 3, 3.0), 1.0 / 3.0);
            CHECK(lq_norm(V, 3.0) == Catch::Approx(closed).epsilon(1e-6));
        }
        CHECK_THROWS_WITH(lq_norm(Potential{IonescuJerison{10.0, 3}}, 2.0),
                          Catch::Matchers::StartsWith("divergent"));
        // scaled norms stay in a fixed bracket
        double lo = 1e300, hi = 0.0;
        for (double n : {10.0, 100.0, 1000.0}) {
            const double v =
                lq_norm(Potential{IonescuJerison{n, 3}}, 3.0) * std::pow(n, 1.0 - 4.0 / 6.0);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(hi / lo < 1.01); // constant in n up to quadrature error
    }
}

TEST_CASE("local ball norms") {
    SECTION("1D step potentials are exact") {
        const Potential V = SquareWell1D{Complex(0, 2), 1.0};
        CHECK(local_ball_norm(V, 1.0, Point{0, 0, 0}, 10.0) == Catch::Approx(4.0));
        const Potential W = SquareWell1D{Complex(1, 0), 5.0};
        CHECK(local_ball_norm(W, 2.0, Point{0, 0, 0}, 1.0) == Catch::Approx(std::sqrt(2.0)));
    }
    SECTION("monotone in radius, converges to the global norm") {
        const Potential V = RadialStep3D{Complex(0.5, -0.5), 2.0};
        double prev = 0.0;
        for (double r : {0.5, 1.0, 2.0, 4.0}) {
            const double v = local_ball_norm(V, 2.0, Point{0.3, 0, 0}, r);
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
        CHECK(prev == Catch::Approx(lq_norm(V, 2.0)).epsilon(1e-12));
    }
    SECTION("Ionescu-Jerison reduced path agrees with generic quadrature") {
        const Potential V = IonescuJerison{10.0, 3};
        const double reduced = local_ball_norm(V, 2.0, Point{0, 0, 0}, 20.0);
        const double generic =
            std::pow(detail::ball_integral_generic(V, 2.0, Point{0, 0, 0}, 20.0), 0.5);
        CHECK(generic == Catch::Approx(reduced).epsilon(2e-3));
    }
    SECTION("model curve values") {
        CHECK(ij_local_norm_model(10.0, 10.0, 3) == Catch::Approx(0.1));
        CHECK(ij_local_norm_model(10.0, 10.0 * std::exp(1.0), 3) == Catch::Approx(0.1));
        CHECK(ij_local_norm_model(10.0, 1000.0, 3) == Catch::Approx(0.1 * std::log(100.0)));
    }
}

TEST_CASE("perturbed Ionescu-Jerison potentials") {
    GridSpec g;
    g.d = 3;
    g.half_extent = {6.0, 6.0, 6.0};
    g.points = {25, 25, 25};
    SampledGrid W;
    W.grid = g;
    W.values.resize(g.total());
    std::size_t idx = 0;
    for (int i = 0; i < 25; ++i)
        for (int j = 0; j < 25; ++j)
            for (int k = 0; k < 25; ++k, ++idx) {
                const double x = -6.0 + i * g.spacing(0), y = -6.0 + j * g.spacing(1),
                             z = -6.0 + k * g.spacing(2);
                W.values[idx] = std::exp(-0.5 * (x * x + y * y + z * z));
            }

    SECTION("kappa = 0 reduces to the base potential") {
        const Potential U = perturbed_ij(10.0, Complex(0, 0), W);
        const Potential V = IonescuJerison{10.0, 3};
        for (double x : {0.0, 1.0, 3.0})
            CHECK(std::abs(eval(U, x, 0.5, -0.5) - eval(V, x, 0.5, -0.5)) < 1e-15);
    }
    SECTION("triangle inequality against the components") {
        const Complex kap(0.05, 0.02);
        const Potential U = perturbed_ij(10.0, kap, W);
        const double lhs = lq_norm(U, 3.0);
        const double rhs = lq_norm(Potential{IonescuJerison{10.0, 3}}, 3.0) +
                           std::abs(kap) * lq_norm(Potential{SampledPotential{W}}, 3.0);
        CHECK(lhs <= rhs * (1.0 + 1e-6));
    }
    SECTION("norm decreases along n -> inf, kappa -> 0") {
        double prev = 1e300;
        const double ns[3] = {10.0, 100.0, 1000.0};
        const double ks[3] = {0.1, 0.01, 0.001};
        for (int i = 0; i < 3; ++i) {
            const double v = lq_norm(perturbed_ij(ns[i], Complex(ks[i], 0), W), 3.0);
            CHECK(v < prev);
            prev = v;
        }
    }
    SECTION("rejects large kappa") {
        CHECK_THROWS_WITH(perturbed_ij(10.0, Complex(1.5, 0), W),
                          Catch::Matchers::StartsWith("domain"));
    }
}

TEST_CASE("sampled potential text serialization round trip") {
    GridSpec g;
    g.d = 2;
    g.half_extent = {1.5, 2.5, 0};
    g.points = {4, 3, 0};
    SampledGrid data;
    data.grid = g;
    data.values.resize(g.total());
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& v : data.values) v = Complex(gauss(rng), gauss(rng));
    const SampledPotential p{data};

    std::stringstream ss;
    write_sampled(ss, p);
    const SampledPotential q = read_sampled(ss);
    REQUIRE(q.data.grid.d == 2);
    REQUIRE(q.data.values.size() == p.data.values.size());
    for (std::size_t i = 0; i < p.data.values.size(); ++i)
        CHECK(std::abs(q.data.values[i] - p.data.values[i]) < 1e-16);
    // interpolation: inside matches grid values, outside is zero
    CHECK(std::abs(eval(Potential{q}, -1.5, -2.5) - q.data.values[0]) < 1e-15);
    CHECK(eval(Potential{q}, 5.0, 0.0) == Complex(0, 0));

    SECTION("malformed header is rejected") {
        std::stringstream bad("7 4 3 1.5 2.5\n");
        CHECK_THROWS_WITH(read_sampled(bad), Catch::Matchers::StartsWith("parse"));
    }
}

TEST_CASE("quasimode potentials have the advertised norms") {
    const Potential V = GaussianQuasimodePotential{0.1, 3};
    const double q = 4.0;
    const double closed = std::pow(0.1, 1.0 - 4.0 / (2.0 * q)) * std::pow(2.0 * pi / q, 3.0 / (2.0 * q));
    CHECK(lq_norm(V, q) == Catch::Approx(closed).epsilon(1e-8));
    CHECK(std::abs(eval(V, 0.0, 0.0, 0.0) - Complex(0.1, 0)) < 1e-15);
}

// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "eigenbound/fourier_resolvent.hpp"

using namespace eigenbound;

namespace {

PeriodicField random_field(int d, double L, int n, std::uint64_t seed) {
    PeriodicField f = make_field(d, L, n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (auto& v : f.values) v = Complex(gauss(rng), gauss(rng));
    return f;
}

} // namespace

TEST_CASE("resolvent multiplier is diagonal on lattice modes") {
    const int n = 32;
    const double L = 10.0;
    PeriodicField f = make_field(1, L, n);
    const double xi0 = (pi / L) * 3.0;
    for (int i = 0; i < n; ++i) f.values[i] = std::exp(Complex(0, xi0 * f.coord(i)));
    const ResolventQuery rq = make_resolvent_query(1.0, 0.5);
    const PeriodicField rf = apply_free_resolvent(f, rq);
    const Complex m = 1.0 / (xi0 * xi0 - Complex(1.0, 0.5));
    for (int i = 0; i < n; i += 5)
        CHECK(std::abs(rf.values[i] - m * f.values[i]) < 1e-12);
}

TEST_CASE("zero mode at lam = eps = 1 has magnitude 1/sqrt(2)") {
    const int n = 16;
    PeriodicField f = make_field(2, 6.0, n);
    for (auto& v : f.values) v = 1.0;
    const ResolventQuery rq = make_resolvent_query(1.0, 1.0);
    const PeriodicField rf = apply_free_resolvent(f, rq);
    CHECK(std::abs(rf.values[0] - Complex(1, 0) / Complex(-1, -1)) < 1e-12);
    CHECK(std::abs(std::abs(rf.values[0]) - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("round trip through the symbol is exact") {
    const PeriodicField f = random_field(3, 20.0, 24, 5);
    const ResolventQuery rq = make_resolvent_query(0.3, 0.7);
    const PeriodicField back = apply_helmholtz_symbol(apply_free_resolvent(f, rq), rq);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        worst = std::max(worst, std::abs(back.values[i] - f.values[i]));
    CHECK(worst < 1e-12);
}

TEST_CASE("grid Lp norms") {
    SECTION("constant field") {
        PeriodicField f = make_field(3, 5.0, 8);
        for (auto& v : f.values) v = 1.0;
        for (double p : {1.0, 2.0, 4.0})
            CHECK(lp_grid_norm(f, p) == Catch::Approx(std::pow(10.0, 3.0 / p)).epsilon(1e-12));
    }
    SECTION("Parseval at p = 2") {
        PeriodicField f = random_field(2, 7.0, 32, 9);
        const double direct = lp_grid_norm(f, 2.0);
        PeriodicField hat = f;
        std::array<int, 3> shape{32, 32, 32};
        fft_inplace(hat.values, 2, shape, FFTW_FORWARD);
        // f_hat entries are sums over samples; Plancherel with the lattice
        // weights: ||f||_2^2 = h^d sum |f|^2 = (h^d / N) sum |f_hat|^2
        double s = 0.0;
        for (const auto& v : hat.values) s += std::norm(v);
        const double viaFourier =
            std::sqrt(s * std::pow(f.h(), 2.0) / double(f.values.size()));
        CHECK(viaFourier == Catch::Approx(direct).epsilon(1e-12));
    }
    SECTION("Gaussian against the closed form") {
        const int n = 64;
        PeriodicField f = make_field(3, 12.0, n);
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k, ++idx) {
                    const double x = f.coord(i), y = f.coord(j), z = f.coord(k);
                    f.values[idx] = std::exp(-0.5 * (x * x + y * y + z * z));
                }
        for (double p : {2.0, 4.0}) {
            const double closed = std::pow(2.0 * pi / p, 1.5 / p);
            CHECK(lp_grid_norm(f, p) == Catch::Approx(closed).epsilon(0.01));
        }
    }
}

TEST_CASE("critical exponent") {
    CHECK(pc_exponent(3) == Catch::Approx(4.0));
    CHECK(pc_exponent(2) == Catch::Approx(6.0));
    CHECK_THROWS_WITH(pc_exponent(1), Catch::Matchers::StartsWith("dimension"));
}

TEST_CASE("resolution and resonance guards") {
    PeriodicField f = make_field(1, 50.0, 16); // Nyquist far below 4 lam
    f.values[0] = 1.0;
    CHECK_THROWS_WITH(apply_free_resolvent(f, make_resolvent_query(1.0, 0.5)),
                      Catch::Matchers::StartsWith("resolution"));

    // eps = 0: a lattice point sitting exactly on the sphere |xi| = lam
    PeriodicField g = make_field(1, 8.0, 64);
    g.values[0] = 1.0;
    const double lam = 2.0 * pi / 8.0;
    CHECK_THROWS_WITH(apply_free_resolvent(g, make_resolvent_query(lam, 0.0)),
                      Catch::Matchers::StartsWith("resonance"));
    // off-lattice lam works at eps = 0
    CHECK_NOTHROW(apply_free_resolvent(g, make_resolvent_query(lam * 1.05, 0.0)));
}

TEST_CASE("2pc scaling measurement at desk resolution") {
    const int n = 64;
    const double L = default_2pc_box(1.0, n);
    const TwoPcMeasurement m = measure_2pc_scaling(1.0, {0.4, 0.2, 0.1}, 3, 3, n, L, 1);
    CHECK(m.fit.slope == Catch::Approx(-0.5).margin(0.1));
    CHECK_FALSE(m.lemma_regime); // lam = 1 sits outside lam^{-1} <= eps
    // monotone growth of the estimate as eps decreases
    for (std::size_t i = 1; i < m.estimate.size(); ++i)
        CHECK(m.estimate[i] >= m.estimate[i - 1]);
    // the cap packet beats seeded random fields decisively
    for (std::size_t i = 0; i < m.estimate.size(); ++i)
        CHECK(m.knapp_ratio[i] >= 2.0 * m.best_random_ratio[i]);
}

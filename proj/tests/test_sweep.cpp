// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "eigenbound/sweep.hpp"

using namespace eigenbound;

TEST_CASE("fit_slope recovers exact power laws") {
    std::vector<std::pair<double, double>> sq, inv;
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
        sq.emplace_back(x, x * x);
        inv.emplace_back(x, 5.0 / x);
    }
    const SlopeFit f1 = fit_slope(sq);
    CHECK(f1.slope == Catch::Approx(2.0).margin(1e-12));
    CHECK(f1.max_residual < 1e-12);
    const SlopeFit f2 = fit_slope(inv);
    CHECK(f2.slope == Catch::Approx(-1.0).margin(1e-12));
    CHECK(f2.intercept == Catch::Approx(std::log(5.0)).margin(1e-12));
}

TEST_CASE("fit_slope degenerate inputs") {
    CHECK_THROWS_WITH(fit_slope({{1.0, 2.0}, {1.0, 3.0}}), Catch::Matchers::StartsWith("degenerate"));
    CHECK_THROWS_WITH(fit_slope({{2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}}),
                      Catch::Matchers::StartsWith("degenerate"));
}

TEST_CASE("fit_slope is invariant under scaling the ordinates") {
    std::vector<std::pair<double, double>> a, b;
    for (double x : {0.1, 0.2, 0.4, 0.8}) {
        a.emplace_back(x, std::pow(x, 1.7) * 3.0);
        b.emplace_back(x, std::pow(x, 1.7) * 300.0);
    }
    CHECK(fit_slope(a).slope == Catch::Approx(fit_slope(b).slope).margin(1e-13));
    CHECK(fit_slope(b).intercept ==
          Catch::Approx(fit_slope(a).intercept + std::log(100.0)).margin(1e-12));
}

TEST_CASE("fit_constant") {
    CHECK(fit_constant({{2.0, 1.0}}).value == Catch::Approx(2.0));
    CHECK(fit_constant({{1.0, 2.0}, {3.0, 1.0}}).value == Catch::Approx(3.0));
    // monotone under adding sweep points
    std::vector<std::pair<double, double>> pts = {{1.0, 2.0}};
    double prev = fit_constant(pts).value;
    for (double lhs : {0.3, 2.5, 1.0}) {
        pts.emplace_back(lhs, 1.0);
        const double cur = fit_constant(pts).value;
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("log_correct") {
    std::vector<std::pair<double, double>> pts = {{0.1, 1.0}, {0.2, 2.0}, {0.4, 4.0}};
    const auto same = log_correct(pts, 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(same[i].second == pts[i].second);

    std::vector<std::pair<double, double>> logs;
    for (double x : {0.05, 0.1, 0.2}) logs.emplace_back(x, std::abs(std::log(x)));
    for (const auto& [x, y] : log_correct(logs, 1.0)) CHECK(y == Catch::Approx(1.0));

    CHECK_THROWS_WITH(log_correct({{1.5, 1.0}}, 1.0), Catch::Matchers::StartsWith("domain"));
}

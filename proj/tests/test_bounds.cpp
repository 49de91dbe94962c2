#include <doctest.h>

#include <cmath>

#include "eitdist/bounds.hpp"

using namespace eitdist;

TEST_CASE("bound interval closed forms") {
    auto dn0 = dn_bound_interval(0.0);
    CHECK(dn0.lower == 1.0);
    CHECK(dn0.upper == 1.0);
    auto nd0 = nd_bound_interval(0.0);
    CHECK(nd0.lower == 1.0);
    CHECK(nd0.upper == 1.0);

    auto dn = dn_bound_interval(0.6);
    CHECK(dn.lower == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(dn.upper == doctest::Approx(std::sqrt(0.64 / 1.36)).epsilon(1e-15));
    auto nd = nd_bound_interval(0.5);
    CHECK(nd.lower == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(nd.upper == doctest::Approx(std::sqrt(1.25) / 0.75).epsilon(1e-15));

    CHECK(dn.upper <= 1.0);
    CHECK(nd.upper >= 1.0);
    CHECK_THROWS_AS(dn_bound_interval(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(nd_bound_interval(1.0), std::invalid_argument);
}

TEST_CASE("dn sweep stays inside the bounds") {
    std::vector<double> rho_grid{0.0, 0.3, 0.6, 0.85};
    auto reports = verify_bounds(0.3, 2.0, rho_grid, OperatorKind::DnDiff, 1e-12, 2);
    REQUIRE(reports.size() == rho_grid.size());
    for (const auto& rep : reports) {
        CHECK(rep.converged);
        CHECK(rep.in_bounds);
        CHECK(rep.ratio <= 1.0 + 1e-12);
        CHECK(rep.ratio >= rep.lower - 1e-9 * rep.upper);
        CHECK(rep.nonconcentric_norm >= rep.concentric_norm * (1.0 - 1e-12));
    }
    CHECK(reports[0].ratio == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("nd sweep stays inside the bounds") {
    std::vector<double> rho_grid{0.0, 0.4, 0.7};
    auto reports = verify_bounds(0.3, 2.0, rho_grid, OperatorKind::NdDiff, 1e-12, 2);
    for (const auto& rep : reports) {
        CHECK(rep.converged);
        CHECK(rep.in_bounds);
        CHECK(rep.ratio >= 1.0 - 1e-12);
        CHECK(rep.ratio <= rep.upper + 1e-9 * rep.upper);
        CHECK(rep.nonconcentric_norm <= rep.concentric_norm * (1.0 + 1e-12));
    }
}

TEST_CASE("dn ratio is nearly radius-independent for small inclusions") {
    std::vector<double> rho_grid{0.3, 0.6};
    auto big = verify_bounds(0.1, 2.0, rho_grid, OperatorKind::DnDiff, 1e-12, 2);
    auto small = verify_bounds(0.01, 2.0, rho_grid, OperatorKind::DnDiff, 1e-12, 2);
    for (size_t i = 0; i < rho_grid.size(); ++i)
        CHECK(std::abs(big[i].ratio - small[i].ratio) < 0.01);
}

TEST_CASE("dn ratio is nearly contrast-independent") {
    std::vector<double> rho_grid{0.3, 0.6};
    auto high = verify_bounds(0.1, 5.0, rho_grid, OperatorKind::DnDiff, 1e-12, 2);
    auto low = verify_bounds(0.1, -0.5, rho_grid, OperatorKind::DnDiff, 1e-12, 2);
    for (size_t i = 0; i < rho_grid.size(); ++i)
        CHECK(std::abs(high[i].ratio - low[i].ratio) < 0.02);
}

TEST_CASE("fixed-size depth sweep") {
    std::vector<double> c_grid{0.0, 0.3, 0.6};
    auto reports = verify_fixed_size(0.1, 2.0, c_grid, OperatorKind::DnDiff, 5, 1e-12, 2);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].rho_small == 0.0);
    for (const auto& rep : reports) {
        CHECK(rep.converged);
        CHECK(rep.bound_ok);
        CHECK(rep.leading.size() == 5);
        for (size_t i = 1; i < rep.leading.size(); ++i)
            CHECK(rep.leading[i] <= rep.leading[i - 1] * (1.0 + 1e-13));
    }
    // deeper centers are easier to distinguish
    CHECK(reports[1].norm > reports[0].norm);
    CHECK(reports[2].norm > reports[1].norm);
    // the quadratic for rho reproduces the center
    for (const auto& rep : reports) {
        double rho = rep.rho_small, r = 0.1;
        CHECK(rep.c * r * r * rho * rho + (1.0 - r * r) * rho - rep.c ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(verify_fixed_size(0.1, 2.0, {0.95}, OperatorKind::DnDiff),
                    std::invalid_argument);
}

TEST_CASE("size monotonicity of the dn norm") {
    for (double A : {2.0, -0.5}) {
        auto reports = verify_monotonicity(Complex(0.3, 0.0), {0.1, 0.2, 0.3}, A);
        REQUIRE(reports.size() == 3);
        for (const auto& rep : reports) CHECK(rep.converged);
        CHECK(reports[1].norm > reports[0].norm);
        CHECK(reports[2].norm > reports[1].norm);
    }
    CHECK_THROWS_AS(verify_monotonicity(Complex(0.5, 0.0), {0.6}, 2.0),
                    std::invalid_argument);
}

#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"

#include "oracles.hpp"
#include "triwalk/stationary.hpp"
#include "triwalk/weaklimit.hpp"

using namespace triwalk;

namespace {

constexpr double kPi = std::numbers::pi;

// Midpoint rule in u after x = sin(u) / s, the edge singularity removed by hand.
template <class F>
double substituted_integral(F f, double s, double a, double b, std::size_t nodes = 200000) {
    const double ua = std::asin(std::clamp(a * s, -1.0, 1.0));
    const double ub = std::asin(std::clamp(b * s, -1.0, 1.0));
    const double h = (ub - ua) / static_cast<double>(nodes);
    double acc = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        const double u = ua + (static_cast<double>(j) + 0.5) * h;
        acc += f(std::sin(u) / s) * std::cos(u) / s;
    }
    return acc * h;
}

}  // namespace

TEST_CASE("limit density values") {
    CHECK(weaklimit::density(0.0) == doctest::Approx(std::sqrt(8.0) / (3.0 * kPi)).epsilon(1e-15));
    CHECK(weaklimit::density(0.9) == 0.0);
    CHECK(weaklimit::density(1.0 / std::sqrt(3.0)) == 0.0);
    for (const double x : {0.05, 0.2, 0.41, 0.57}) CHECK(weaklimit::density(x) == weaklimit::density(-x));
    CHECK_THROWS_AS((void)weaklimit::density(1.5), std::domain_error);

    CHECK(weaklimit::hadamard_density(0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    CHECK(weaklimit::hadamard_density(0.8) == 0.0);
    CHECK_THROWS_AS((void)weaklimit::hadamard_density(-1.01), std::domain_error);
}

TEST_CASE("continuous masses") {
    const double r3 = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(weaklimit::continuous_mass() - 2.0 / 3.0) < 1e-6);
    CHECK(std::abs(weaklimit::continuous_mass(0.0, r3) - 1.0 / 3.0) < 1e-6);
    CHECK(weaklimit::continuous_mass(-r3 / 2.0, r3 / 2.0) < 2.0 / 3.0);

    const auto f = [](double x) { return weaklimit::density(x); };
    CHECK(std::abs(weaklimit::continuous_mass(-0.2, 0.45) - substituted_integral(f, std::sqrt(3.0), -0.2, 0.45)) <
          1e-9);

    const double r2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(weaklimit::hadamard_mass(-r2, r2) - 1.0) < 1e-6);
}

TEST_CASE("closed-form CDF agrees with quadrature") {
    const double r3 = 1.0 / std::sqrt(3.0);
    CHECK(weaklimit::limit_cdf(-1.0) == 0.0);
    CHECK(weaklimit::limit_cdf(1.0) == 1.0);
    CHECK(weaklimit::limit_cdf(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    for (const double x : {-0.5, -0.3, -0.01, 0.01, 0.2, 0.55}) {
        const double jump = x >= 0.0 ? 1.0 / 3.0 : 0.0;
        CHECK(std::abs(weaklimit::limit_cdf(x) - (weaklimit::continuous_mass(-r3, x) + jump)) < 1e-10);
    }
}

TEST_CASE("localization mass from the three pure states") {
    const double m = weaklimit::localization_mass();
    CHECK(std::abs(m - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(m - (1.0 - weaklimit::continuous_mass())) < 1e-6);
    for (const QubitState& q : {QubitState(1.0, 0.0, 0.0), QubitState(0.0, 1.0, 0.0), QubitState(0.0, 0.0, 1.0)}) {
        const double total = stationary::total_mass(q);
        CHECK(total > 0.0);
        CHECK(total < 1.0);
    }
}

TEST_CASE("empirical rescaled mixture") {
    CHECK_THROWS_AS((void)weaklimit::empirical_rescaled(99), std::invalid_argument);
    const auto e = weaklimit::empirical_rescaled(500);
    CHECK(std::abs(e.total_mass() - 1.0) < 1e-12);
    CHECK(e.atoms.size() == 1001);

    double outside = 0.0;
    double asymmetry = 0.0;
    for (std::size_t i = 0; i < e.atoms.size(); ++i) {
        const auto& a = e.atoms[i];
        CHECK(std::abs(a.x) <= 1.0);
        if (std::abs(a.x) > 1.0 / std::sqrt(3.0) + 0.05) outside += a.mass;
        asymmetry = std::max(asymmetry, std::abs(a.mass - e.atoms[e.atoms.size() - 1 - i].mass));
    }
    CHECK(outside < 0.02);
    CHECK(asymmetry < 1e-12);
}

TEST_CASE("Kolmogorov distance") {
    // The localized mass is spread over sites near the origin, not only n = 0,
    // so the distance stays above (1/3 - P_mix(0)) / 2 = 0.0825 for every t.
    const double d100 = weaklimit::cdf_distance(weaklimit::empirical_rescaled(100));
    const double d200 = weaklimit::cdf_distance(weaklimit::empirical_rescaled(200));
    const double d500 = weaklimit::cdf_distance(weaklimit::empirical_rescaled(500));
    CHECK(d100 == doctest::Approx(0.0960).epsilon(1e-2));
    CHECK(d200 == doctest::Approx(0.0751).epsilon(1e-2));
    CHECK(d500 == doctest::Approx(0.0801).epsilon(1e-2));

    // Brute-force sup over a fine grid never exceeds the atom-based value.
    const auto e = weaklimit::empirical_rescaled(200);
    double cumulative = 0.0;
    std::size_t next = 0;
    double grid_sup = 0.0;
    for (int j = 0; j <= 20000; ++j) {
        const double x = -1.0 + 2.0 * j / 20000.0 + 1e-9;
        while (next < e.atoms.size() && e.atoms[next].x <= x) cumulative += e.atoms[next++].mass;
        grid_sup = std::max(grid_sup, std::abs(cumulative - weaklimit::limit_cdf(x)));
    }
    CHECK(grid_sup <= d200 + 1e-12);

    const auto table = weaklimit::cdf_table(e);
    CHECK(table.size() == e.atoms.size());
    CHECK(table.back().empirical == doctest::Approx(1.0).epsilon(1e-12));
}

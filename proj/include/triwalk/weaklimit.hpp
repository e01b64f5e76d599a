// Weak limit of the rescaled position X_t / t for a walker started from the
// uniform mixture of the three chirality basis states.
//
// The limit law is a point mass 1/3 at x = 0 plus the continuous density
//
//   f(x) = sqrt(8) / (3 pi (1 - x^2) sqrt(1 - 3 x^2)),  |x| < 1/sqrt(3).
//
// The two-state Hadamard walk's density is provided for comparison; it has
// no point mass.

#pragma once

#include <cstdint>
#include <vector>

namespace triwalk::weaklimit {

inline constexpr double kPointMassWeight = 1.0 / 3.0;

// Continuous part of the 3-state limit. Throws std::domain_error outside [-1, 1].
[[nodiscard]] double density(double x);
// Hadamard-walk limit density. Throws std::domain_error outside [-1, 1].
[[nodiscard]] double hadamard_density(double x);

// Integral of density() over (a, b), by quadrature after x = sin(u)/sqrt(3).
[[nodiscard]] double continuous_mass(double a, double b);
[[nodiscard]] double continuous_mass();
// Integral of hadamard_density() over (a, b), after x = sin(u)/sqrt(2).
[[nodiscard]] double hadamard_mass(double a, double b);

// (1/3) * sum of the stationary totals of the three basis states.
[[nodiscard]] double localization_mass();

// Limit CDF including the jump of 1/3 at 0 (right-continuous). Closed form:
// inside the support F(x) = 1/3 + (2/(3 pi)) atan(sqrt(2) x / sqrt(1 - 3x^2))
// plus 1/3 for x >= 0.
[[nodiscard]] double limit_cdf(double x);

struct Atom {
    double x = 0.0;
    double mass = 0.0;
};

struct EmpiricalRescaled {
    std::uint64_t t = 0;
    std::vector<Atom> atoms;  // sorted by x, one per site in [-t, t]

    [[nodiscard]] double total_mass() const;
};

// Mixture of the three basis-state evolutions mapped to x = n / t.
// Throws std::invalid_argument for t < 100.
[[nodiscard]] EmpiricalRescaled empirical_rescaled(std::uint64_t t);

// sup_x |F_emp(x) - F_limit(x)|, checked at every atom (both one-sided
// limits) and at the jump point 0.
[[nodiscard]] double cdf_distance(const EmpiricalRescaled& e);

struct CdfRow {
    double x = 0.0;
    double empirical = 0.0;
    double limit = 0.0;
};
[[nodiscard]] std::vector<CdfRow> cdf_table(const EmpiricalRescaled& e);

}  // namespace triwalk::weaklimit

// Closed-form t -> infinity limit of P(n, t).
//
// Only the phase-0 spectral branch survives the long-time limit. Its
// amplitudes are finite combinations of
//
//   I(n) = 2 c^{|n|+1} / (c^2 - 1),   c = -5 + 2 sqrt(6),
//
// so the limiting profile decays geometrically, by c^2 per site.

#pragma once

#include <vector>

#include "triwalk/types.hpp"
#include "triwalk/walk.hpp"

namespace triwalk::stationary {

// -5 + 2 sqrt(6), a root of c^2 + 10c + 1 = 0.
[[nodiscard]] double decay_constant();

struct GeometricKernel {
    double c = 0.0;
    double i = 0.0;        // I(n)
    double j_plus = 0.0;   // I(n) + I(n+1)
    double j_minus = 0.0;  // I(n-1) + I(n)
    double k_plus = 0.0;   // I(n+1)
    double k_minus = 0.0;  // I(n-1)
    double l = 0.0;        // I(n-1) + 2 I(n) + I(n+1)
};

[[nodiscard]] double base_integral(Site n);  // I(n)
[[nodiscard]] GeometricKernel kernel(Site n);

// Phase-0 amplitude at site n. Its squared moduli are the limit components.
[[nodiscard]] ChiralVector limit_amplitude(Site n, const QubitState& q);

// lim_t P(n, t; l).
[[nodiscard]] double limit_component(Site n, Chirality l, const QubitState& q);
// lim_t P(n, t), summed over chirality.
[[nodiscard]] double limit_probability(Site n, const QubitState& q);

// sum over all n of limit_probability(n): the explicit sum for |n| <= 2
// plus the exact geometric tail. Lies in [0, 1]; generally below 1.
[[nodiscard]] double total_mass(const QubitState& q);

// sum_{|n| <= window} limit_probability(n), summed site by site.
[[nodiscard]] double truncated_mass(const QubitState& q, Site window);

struct StationaryProfile {
    Distribution sites;   // |n| <= window
    double total_mass = 0.0;
};

[[nodiscard]] StationaryProfile profile(const QubitState& q, Site window);

// Squared moduli are clamped to zero when within 1e-15 below it.
[[nodiscard]] double clamp_probability(double p);

}  // namespace triwalk::stationary

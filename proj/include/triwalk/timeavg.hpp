// Long-time (Cesaro) averages of P(n, t).
//
// On an odd cycle of N sites the evolution operator splits into N momentum
// blocks U(2 pi m / N). lim_T (1/T) sum_{t<T} P(n, t) equals the sum over
// distinct eigenvalues of the squared norm of the initial state projected
// onto each eigenspace, read off at site n. No time loop is needed.
//
// The N -> infinity limit at the origin has a closed form, computed by
// infinite_time_average_*.

#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "triwalk/types.hpp"
#include "triwalk/walk.hpp"

namespace triwalk::timeavg {

// Phases closer than this (after reduction to [0, 2 pi)) count as one eigenvalue.
inline constexpr double kPhaseTolerance = 1e-9;

struct SpectralProjector {
    double phase = 0.0;  // canonical, in [0, 2 pi)
    std::size_t branch = 0;  // 0: phase 0; 1: +theta; 2: -theta (both -1 modes at m = 0)
    Matrix3 projector;
};

struct MomentumBlock {
    int m = 0;
    double k = 0.0;
    Complex omega;  // e^{2 pi i / N}
    Matrix3 block_operator;
    // Two projectors at m = 0 (phase 0 and the rank-2 phase-pi eigenspace),
    // three otherwise.
    std::vector<SpectralProjector> projectors;
};

// Block for mode m, |m| <= (N-1)/2.
[[nodiscard]] MomentumBlock momentum_block(std::size_t n_sites, int m);

struct EigenvalueGroup {
    double phase = 0.0;
    std::vector<std::pair<int, std::size_t>> members;  // (m, branch)
    ChiralVector site_amplitude;
};

// Projections of the initial state onto every cycle eigenspace, read off at
// `site` and grouped by equal eigenvalue. Groups are sorted by phase.
[[nodiscard]] std::vector<EigenvalueGroup> eigenvalue_groups(std::size_t n_sites,
                                                             const QubitState& q, Site site);

// Number of distinct eigenvalues implied by the band structure alone:
// phase 0, phase pi (m = 0) and +-theta_m for m = 1..(N-1)/2.
[[nodiscard]] std::size_t structural_group_count(std::size_t n_sites);

// Exact Cesaro average of P(site, t) on the N-cycle. Throws
// PhysicalInputError for even N.
[[nodiscard]] double cycle_time_average(std::size_t n_sites, const QubitState& q, Site site);

// Per-chirality breakdown of cycle_time_average.
[[nodiscard]] std::array<double, 3> cycle_time_average_components(std::size_t n_sites,
                                                                  const QubitState& q, Site site);

// N -> infinity limit of the origin average, chirality l.
[[nodiscard]] double infinite_time_average_component(Chirality l, const QubitState& q);

// (5 - 2 sqrt 6)(1 + |alpha + beta|^2 + |beta + gamma|^2 - 2 |beta|^2)
[[nodiscard]] double infinite_time_average_total(const QubitState& q);

}  // namespace triwalk::timeavg

// Direct real-space evolution of the three-state walk on the line and on
// odd cycles.
//
// One step applies the coin at every site and then moves the L component
// one site to the left, keeps the 0 component in place and moves the R
// component one site to the right:
//
//   Psi(n, t+1) = U_L Psi(n+1, t) + U_0 Psi(n, t) + U_R Psi(n-1, t).

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "triwalk/types.hpp"

namespace triwalk {

using Site = std::int64_t;

// Diagonal -1/3, off-diagonal 2/3.
[[nodiscard]] Matrix3 coin_matrix();

struct ProjectorTriple {
    Matrix3 left;
    Matrix3 stay;
    Matrix3 right;
};

// Row decomposition of the coin: left/stay/right each keep one row.
[[nodiscard]] ProjectorTriple projector_matrices();

// coin_matrix() * v, written out so the line and cycle steppers share the
// exact same floating-point operations.
[[nodiscard]] ChiralVector apply_coin(const ChiralVector& v);

// Dense amplitudes on the window [origin, origin + size).
class LineState {
public:
    LineState(Site origin, std::vector<ChiralVector> amplitudes, std::uint64_t time);

    [[nodiscard]] Site origin() const { return origin_; }
    [[nodiscard]] Site last_site() const { return origin_ + static_cast<Site>(amps_.size()) - 1; }
    [[nodiscard]] std::uint64_t time() const { return time_; }
    [[nodiscard]] std::span<const ChiralVector> amplitudes() const { return amps_; }

    // Zero outside the window.
    [[nodiscard]] ChiralVector amplitude(Site n) const;
    [[nodiscard]] double total_probability() const;

private:
    Site origin_;
    std::vector<ChiralVector> amps_;
    std::uint64_t time_;
};

// Amplitudes on Z_N, N odd; site s is stored at index s.
class CycleState {
public:
    CycleState(std::vector<ChiralVector> amplitudes, std::uint64_t time);

    [[nodiscard]] std::size_t n_sites() const { return amps_.size(); }
    [[nodiscard]] std::uint64_t time() const { return time_; }
    [[nodiscard]] std::span<const ChiralVector> amplitudes() const { return amps_; }

    // Any integer site, reduced mod N.
    [[nodiscard]] const ChiralVector& amplitude(Site n) const;
    [[nodiscard]] double total_probability() const;

private:
    std::vector<ChiralVector> amps_;
    std::uint64_t time_;
};

struct SiteProbability {
    Site n = 0;
    double total = 0.0;
    double l = 0.0;
    double zero = 0.0;
    double r = 0.0;

    [[nodiscard]] double operator[](Chirality c) const {
        switch (c) {
            case Chirality::L: return l;
            case Chirality::Zero: return zero;
            case Chirality::R: return r;
        }
        return r;
    }
};

// Per-site probabilities, sorted by site, with per-chirality breakdown.
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(std::vector<SiteProbability> entries);

    [[nodiscard]] std::span<const SiteProbability> entries() const { return entries_; }
    // All-zero entry for sites not stored.
    [[nodiscard]] SiteProbability at(Site n) const;
    [[nodiscard]] double total() const;

private:
    std::vector<SiteProbability> entries_;
};

[[nodiscard]] SiteProbability site_probability(Site n, const ChiralVector& psi);

[[nodiscard]] LineState initial_line_state(const QubitState& q);
[[nodiscard]] LineState step_line(const LineState& s);
[[nodiscard]] LineState evolve_line(const QubitState& q, std::uint64_t steps);

// Throws PhysicalInputError for even N or N < 3.
[[nodiscard]] CycleState initial_cycle_state(const QubitState& q, std::size_t n_sites);
[[nodiscard]] CycleState step_cycle(const CycleState& s);
[[nodiscard]] CycleState evolve_cycle(const QubitState& q, std::size_t n_sites,
                                      std::uint64_t steps);

[[nodiscard]] Distribution distribution(const LineState& s);
[[nodiscard]] Distribution distribution(const CycleState& s);

// P(0, t) for t = 0..steps on the line, plus the final state.
struct OriginTrace {
    std::vector<double> p0;
    LineState final_state;
};
[[nodiscard]] OriginTrace trace_origin(const QubitState& q, std::uint64_t steps);

}  // namespace triwalk

#include "triwalk/timeavg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "triwalk/spectral.hpp"
#include "triwalk/stationary.hpp"

namespace triwalk::timeavg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double canonical_phase(double phase) {
    double p = std::fmod(phase, kTwoPi);
    if (p < 0.0) p += kTwoPi;
    if (p >= kTwoPi) p = 0.0;
    return p;
}

void require_odd(std::size_t n_sites) {
    if (n_sites < 3 || n_sites % 2 == 0) {
        throw PhysicalInputError("cycle length must be odd and at least 3, got " +
                                 std::to_string(n_sites));
    }
}

struct Contribution {
    double phase;
    int m;
    std::size_t branch;
    ChiralVector amplitude;
};

}  // namespace

MomentumBlock momentum_block(std::size_t n_sites, int m) {
    require_odd(n_sites);
    const int half = static_cast<int>((n_sites - 1) / 2);
    if (m < -half || m > half) {
        throw std::out_of_range("mode index outside [-(N-1)/2, (N-1)/2]");
    }
    const double n = static_cast<double>(n_sites);
    MomentumBlock b;
    b.m = m;
    b.k = kTwoPi * static_cast<double>(m) / n;
    b.omega = std::polar(1.0, kTwoPi / n);
    b.block_operator = fourier_operator(b.k);

    if (m == 0) {
        // The phase -1 eigenspace is two-dimensional at k = 0; take its
        // projector as the complement of the phase-0 one.
        const Matrix3 stay = stationary_projector(0.0);
        b.projectors.push_back({0.0, 0, stay});
        b.projectors.push_back({std::numbers::pi, 1, Matrix3::Identity() - stay});
        return b;
    }
    const EigenSystem es = eigensystem(b.k);
    for (std::size_t j = 0; j < 3; ++j) {
        b.projectors.push_back({canonical_phase(es.phases[j]), j, es.projector(j)});
    }
    return b;
}

std::size_t structural_group_count(std::size_t n_sites) {
    require_odd(n_sites);
    return 2 + (n_sites - 1);
}

std::vector<EigenvalueGroup> eigenvalue_groups(std::size_t n_sites, const QubitState& q,
                                               Site site) {
    require_odd(n_sites);
    const int half = static_cast<int>((n_sites - 1) / 2);
    const Vector3 psi0 = q.amplitudes().to_eigen();
    const double inv_n = 1.0 / static_cast<double>(n_sites);

    std::vector<Contribution> parts;
    parts.reserve(3 * n_sites);
    for (int m = -half; m <= half; ++m) {
        const MomentumBlock b = momentum_block(n_sites, m);
        const Complex plane = std::polar(inv_n, b.k * static_cast<double>(site));
        for (const auto& p : b.projectors) {
            parts.push_back(
                {p.phase, m, p.branch, plane * ChiralVector::from_eigen(p.projector * psi0)});
        }
    }
    std::stable_sort(parts.begin(), parts.end(),
                     [](const Contribution& a, const Contribution& b) { return a.phase < b.phase; });

    std::vector<EigenvalueGroup> groups;
    for (const auto& part : parts) {
        if (groups.empty() || part.phase - groups.back().phase > kPhaseTolerance) {
            groups.push_back({part.phase, {}, {}});
        }
        groups.back().members.emplace_back(part.m, part.branch);
        groups.back().site_amplitude += part.amplitude;
    }
    // Phases just below 2 pi belong with phase 0.
    if (groups.size() > 1 && kTwoPi - groups.back().phase + groups.front().phase <= kPhaseTolerance) {
        auto& first = groups.front();
        for (const auto& mem : groups.back().members) first.members.push_back(mem);
        first.site_amplitude += groups.back().site_amplitude;
        groups.pop_back();
    }
    return groups;
}

std::array<double, 3> cycle_time_average_components(std::size_t n_sites, const QubitState& q,
                                                    Site site) {
    std::array<double, 3> out{};
    for (const auto& g : eigenvalue_groups(n_sites, q, site)) {
        for (const Chirality c : kChiralities) {
            out[static_cast<std::size_t>(c)] += std::norm(g.site_amplitude[c]);
        }
    }
    return out;
}

double cycle_time_average(std::size_t n_sites, const QubitState& q, Site site) {
    const auto parts = cycle_time_average_components(n_sites, q, site);
    return parts[0] + parts[1] + parts[2];
}

double infinite_time_average_component(Chirality l, const QubitState& q) {
    const double s6 = std::sqrt(6.0);
    const Complex a = q.alpha();
    const Complex b = q.beta();
    const Complex g = q.gamma();
    double value = 0.0;
    switch (l) {
        case Chirality::L:
            value = std::norm(s6 * a - 2.0 * (s6 - 3.0) * b + (12.0 - 5.0 * s6) * g) / 36.0;
            break;
        case Chirality::Zero:
            value = (s6 - 3.0) * (s6 - 3.0) * std::norm(a + b + g) / 9.0;
            break;
        case Chirality::R:
            value = std::norm(s6 * g - 2.0 * (s6 - 3.0) * b + (12.0 - 5.0 * s6) * a) / 36.0;
            break;
    }
    return stationary::clamp_probability(value);
}

double infinite_time_average_total(const QubitState& q) {
    const double s6 = std::sqrt(6.0);
    const Complex a = q.alpha();
    const Complex b = q.beta();
    const Complex g = q.gamma();
    const double value =
        (5.0 - 2.0 * s6) * (1.0 + std::norm(a + b) + std::norm(b + g) - 2.0 * std::norm(b));
    return stationary::clamp_probability(value);
}

}  // namespace triwalk::timeavg

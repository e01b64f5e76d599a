#include "triwalk/stationary.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace triwalk::stationary {

double decay_constant() {
    static const double c = -5.0 + 2.0 * std::sqrt(6.0);
    return c;
}

double clamp_probability(double p) {
    if (p < 0.0 && p > -1e-15) return 0.0;
    return p;
}

double base_integral(Site n) {
    const double c = decay_constant();
    const auto power = static_cast<int>(std::llabs(n) + 1);
    return 2.0 * std::pow(c, power) / (c * c - 1.0);
}

GeometricKernel kernel(Site n) {
    GeometricKernel g;
    g.c = decay_constant();
    const double prev = base_integral(n - 1);
    const double here = base_integral(n);
    const double next = base_integral(n + 1);
    g.i = here;
    g.j_plus = here + next;
    g.j_minus = prev + here;
    g.k_plus = next;
    g.k_minus = prev;
    g.l = prev + 2.0 * here + next;
    return g;
}

ChiralVector limit_amplitude(Site n, const QubitState& q) {
    const GeometricKernel g = kernel(n);
    const Complex a = q.alpha();
    const Complex b = q.beta();
    const Complex c = q.gamma();
    return {2.0 * a * g.i + b * g.j_plus + 2.0 * c * g.k_plus,
            a * g.j_minus + 0.5 * b * g.l + c * g.j_plus,
            2.0 * a * g.k_minus + b * g.j_minus + 2.0 * c * g.i};
}

double limit_component(Site n, Chirality l, const QubitState& q) {
    return clamp_probability(std::norm(limit_amplitude(n, q)[l]));
}

double limit_probability(Site n, const QubitState& q) {
    const ChiralVector a = limit_amplitude(n, q);
    return clamp_probability(std::norm(a.l)) + clamp_probability(std::norm(a.zero)) +
           clamp_probability(std::norm(a.r));
}

double total_mass(const QubitState& q) {
    // For |n| >= 1 every kernel entry scales by c per unit |n|, so the
    // profile beyond |n| = 2 is P(+-2) (c^2 + c^4 + ...).
    const double c2 = decay_constant() * decay_constant();
    double core = 0.0;
    for (Site n = -2; n <= 2; ++n) core += limit_probability(n, q);
    const double tail_ratio = c2 / (1.0 - c2);
    return core + (limit_probability(-2, q) + limit_probability(2, q)) * tail_ratio;
}

double truncated_mass(const QubitState& q, Site window) {
    if (window < 0) throw std::invalid_argument("window must be non-negative");
    double sum = 0.0;
    // Smallest terms first.
    for (Site m = window; m >= 1; --m) sum += limit_probability(-m, q) + limit_probability(m, q);
    return sum + limit_probability(0, q);
}

StationaryProfile profile(const QubitState& q, Site window) {
    if (window < 0) throw std::invalid_argument("window must be non-negative");
    std::vector<SiteProbability> rows;
    rows.reserve(static_cast<std::size_t>(2 * window + 1));
    for (Site n = -window; n <= window; ++n) {
        SiteProbability p;
        p.n = n;
        p.l = limit_component(n, Chirality::L, q);
        p.zero = limit_component(n, Chirality::Zero, q);
        p.r = limit_component(n, Chirality::R, q);
        p.total = p.l + p.zero + p.r;
        rows.push_back(p);
    }
    return {Distribution(std::move(rows)), total_mass(q)};
}

}  // namespace triwalk::stationary
